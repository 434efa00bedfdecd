"""
State families for parameter sweeps.
"""

from __future__ import annotations

from typing import Callable, Dict, List, NamedTuple, Tuple

import numpy as np

from data.states import MAX_QUBITS, make_ghz, make_mems_purification, make_w
from numerics.types import StateVector
from utils.errors import ParameterError


class Family(NamedTuple):
    factory: Callable[..., StateVector]
    kind: type
    low: float
    high: float


FAMILIES: Dict[str, Family] = {
    "mems": Family(make_mems_purification, float, 0.0, 1.0),
    "ghz": Family(make_ghz, int, 2, MAX_QUBITS),
    "w": Family(make_w, int, 2, MAX_QUBITS),
}


def parse_range(text: str) -> List[float]:
    """Inclusive ``start:stop:step`` range, e.g. ``"0:1:0.05"`` -> 21 points."""
    try:
        start, stop, step = (float(part) for part in text.split(":"))
    except ValueError as err:
        raise ParameterError(f"range must look like start:stop:step, got {text!r}") from err
    if step <= 0 or stop < start:
        raise ParameterError(f"range needs step > 0 and stop >= start, got {text!r}")
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 12) for i in range(count)]


def check_family_values(name: str, values: List[float]) -> Family:
    """Validates every sweep parameter before any state is built."""
    if name not in FAMILIES:
        raise ValueError(f"Unknown family: {name}")
    family = FAMILIES[name]
    for value in values:
        if family.kind is int and value != int(value):
            raise ParameterError(f"family {name!r} needs integer parameters, got {value}")
        if not family.low <= value <= family.high:
            raise ParameterError(
                f"family {name!r} takes parameters in {family.low:g}..{family.high:g}, got {value:g}"
            )
    return family


def load_family(name: str, values: List[float]) -> List[Tuple[float, StateVector]]:
    """
    Returns ``(parameter, state)`` points for a sweep family.
    """
    family = check_family_values(name, values)
    return [(value, family.factory(family.kind(value))) for value in values]
