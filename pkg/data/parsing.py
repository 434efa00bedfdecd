"""
Parsing of user-supplied states.

Two JSON formats are accepted (big-endian qubit order, complex numbers as
``[re, im]`` pairs):

    State JSON:   {"n_qubits": 2, "amplitudes": [[0.7071, 0], [0, 0], [0, 0], [0.7071, 0]]}
    Density JSON: {"n_qubits": 1, "rows": [[[0.5, 0], [0, 0]], [[0, 0], [0.5, 0]]]}

plus named specs such as ``ghz:4``, ``w:3``, ``mems:0.9``, ``werner:0.5`` and
``random:5:12345``. Inputs are validated with a loose tolerance, then
renormalized exactly so decimal truncation in files is absorbed.
"""

from __future__ import annotations

import json
import logging
from typing import Callable, Dict, List, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from data.states import (
    MAX_QUBITS,
    make_basis,
    make_bell,
    make_epr_pair_product,
    make_ghz,
    make_mems_purification,
    make_random_pure,
    make_w,
    make_werner,
)
from numerics.types import DensityMatrix, StateVector
from utils.errors import EntanglementError, ParameterError, StateParseError

logger = logging.getLogger(__name__)

PARSE_NORM_TOL = 1e-5
PARSE_HERMITIAN_TOL = 1e-9

ParsedState = Union[StateVector, DensityMatrix]
ComplexPair = Tuple[float, float]


class StateFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n_qubits: int = Field(ge=1)
    amplitudes: List[ComplexPair]


class DensityFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n_qubits: int = Field(ge=1)
    rows: List[List[ComplexPair]]


def _to_complex(pairs: List[ComplexPair]) -> np.ndarray:
    return np.array([complex(re, im) for re, im in pairs], dtype=np.complex128)


def _is_power_of_two(length: int) -> bool:
    return length >= 2 and not length & (length - 1)


def _parse_amplitudes(model: StateFile) -> StateVector:
    length = len(model.amplitudes)
    if not _is_power_of_two(length):
        raise StateParseError("length must be a power of two", code="bad-length")
    if length != 2**model.n_qubits:
        raise StateParseError(
            f"expected {2**model.n_qubits} amplitudes for {model.n_qubits} qubits, got {length}",
            code="bad-length",
        )
    amps = _to_complex(model.amplitudes)
    if not np.all(np.isfinite(amps)):
        raise StateParseError("amplitudes must be finite numbers", code="malformed-json")
    norm = float(np.linalg.norm(amps))
    if abs(norm - 1.0) > PARSE_NORM_TOL:
        raise StateParseError(f"state norm {norm:.9g} deviates from 1", code="bad-norm")
    return StateVector(amps / norm)


def _parse_rows(model: DensityFile) -> DensityMatrix:
    dim = len(model.rows)
    if not _is_power_of_two(dim):
        raise StateParseError("length must be a power of two", code="bad-length")
    if dim != 2**model.n_qubits or any(len(row) != dim for row in model.rows):
        raise StateParseError(
            f"expected a {2**model.n_qubits}x{2**model.n_qubits} matrix", code="bad-shape"
        )
    rho = np.array([_to_complex(row) for row in model.rows])
    if not np.all(np.isfinite(rho)):
        raise StateParseError("matrix entries must be finite numbers", code="malformed-json")
    if np.max(np.abs(rho - rho.conj().T)) > PARSE_HERMITIAN_TOL:
        raise StateParseError("density matrix is not Hermitian", code="not-hermitian")
    rho = (rho + rho.conj().T) / 2
    trace = float(np.trace(rho).real)
    if abs(trace - 1.0) > PARSE_NORM_TOL:
        raise StateParseError(f"density matrix trace {trace:.9g} deviates from 1", code="bad-norm")
    try:
        return DensityMatrix(rho / trace)
    except EntanglementError as err:
        raise StateParseError(str(err), code="bad-norm") from err


def parse_state(text: str) -> ParsedState:
    """Parse State JSON or Density JSON into a validated value."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as err:
        raise StateParseError(f"malformed JSON: {err.msg}", code="malformed-json") from err
    if not isinstance(payload, dict):
        raise StateParseError("expected a JSON object", code="malformed-json")

    try:
        if "amplitudes" in payload:
            state: ParsedState = _parse_amplitudes(StateFile.model_validate(payload))
        elif "rows" in payload:
            state = _parse_rows(DensityFile.model_validate(payload))
        else:
            raise StateParseError("expected an 'amplitudes' or 'rows' key", code="malformed-json")
    except ValidationError as err:
        first = err.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise StateParseError(f"{location}: {first['msg']}", code="malformed-json") from err

    logger.debug("parsed state", extra={"kind": type(state).__name__, "n_qubits": state.n_qubits})
    return state


_NAMED_SPECS: Dict[str, Tuple[int, Callable[..., ParsedState], Tuple[type, ...]]] = {
    "ghz": (1, make_ghz, (int,)),
    "w": (1, make_w, (int,)),
    "mems": (1, make_mems_purification, (float,)),
    "werner": (1, make_werner, (float,)),
    "bell": (1, make_bell, (int,)),
    "random": (2, make_random_pure, (int, int)),
    "zero": (1, lambda n: make_basis("0" * n), (int,)),
    "basis": (1, make_basis, (str,)),
    "epr2": (0, make_epr_pair_product, ()),
}

# Register size requested by a spec, checked before the state is allocated.
_REGISTER_SIZE: Dict[str, Callable[[List], int]] = {
    "ghz": lambda args: args[0],
    "w": lambda args: args[0],
    "zero": lambda args: args[0],
    "random": lambda args: args[0],
    "basis": lambda args: len(args[0]),
}


def resolve_state_spec(spec: str) -> ParsedState:
    """Build a state from a named spec string such as ``"random:5:12345"``."""
    name, *raw_args = spec.strip().split(":")
    entry = _NAMED_SPECS.get(name.lower())
    if entry is None:
        raise StateParseError(f"unknown state spec {spec!r}", code="unknown-spec")
    arity, factory, types = entry
    if len(raw_args) != arity:
        raise StateParseError(
            f"state spec {name!r} takes {arity} parameter(s), got {len(raw_args)}",
            code="unknown-spec",
        )
    try:
        args = [kind(value) for kind, value in zip(types, raw_args)]
    except ValueError as err:
        raise StateParseError(f"bad parameter in state spec {spec!r}", code="unknown-spec") from err
    size_of = _REGISTER_SIZE.get(name.lower())
    n_qubits = size_of(args) if size_of else 0
    if n_qubits > MAX_QUBITS:
        raise StateParseError(
            f"state spec {spec!r} asks for {n_qubits} qubits, at most {MAX_QUBITS} are supported",
            code="unknown-spec",
        )
    try:
        return factory(*args)
    except ParameterError as err:
        raise StateParseError(str(err), code="unknown-spec") from err
