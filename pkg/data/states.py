"""
Named benchmark states.

Constructors return validated ``StateVector`` / ``DensityMatrix`` values in
big-endian qubit order. Random states use numpy's PCG64 generator
(``numpy.random.default_rng``), so a seed reproduces the same state on every
platform numpy supports.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from numerics.linalg import tensor, tensor_all
from numerics.types import DensityMatrix, StateVector
from utils.errors import ParameterError

MAX_QUBITS = 12

_BELL_AMPLITUDES = {
    0: (1, 0, 0, 1),    # |Phi+>
    1: (1, 0, 0, -1),   # |Phi->
    2: (0, 1, 1, 0),    # |Psi+>
    3: (0, 1, -1, 0),   # |Psi->, the singlet
}


def check_register_size(n: int, what: str, minimum: int = 1) -> None:
    """Rejects register sizes outside ``minimum..MAX_QUBITS`` before anything is allocated."""
    if not minimum <= n <= MAX_QUBITS:
        raise ParameterError(f"{what} supports {minimum}..{MAX_QUBITS} qubits, got {n}")


def make_ghz(n: int) -> StateVector:
    """(|0...0> + |1...1>) / sqrt(2) on ``2 <= n <= 12`` qubits."""
    check_register_size(n, "GHZ state", minimum=2)
    amps = np.zeros(2**n, dtype=np.complex128)
    amps[0] = amps[-1] = 1 / np.sqrt(2)
    return StateVector(amps)


def make_w(n: int) -> StateVector:
    """Equal superposition of the ``n`` single-excitation basis states."""
    check_register_size(n, "W state", minimum=2)
    amps = np.zeros(2**n, dtype=np.complex128)
    for qubit in range(n):
        amps[1 << qubit] = 1 / np.sqrt(n)
    return StateVector(amps)


def make_bell(index: int = 0) -> StateVector:
    """Bell states: 0 = Phi+, 1 = Phi-, 2 = Psi+, 3 = Psi- (singlet)."""
    if index not in _BELL_AMPLITUDES:
        raise ParameterError(f"Bell index must be 0..3, got {index}")
    return StateVector(np.array(_BELL_AMPLITUDES[index], dtype=np.complex128) / np.sqrt(2))


def make_epr_pair_product() -> StateVector:
    """EPR(1,2) x EPR(3,4) with both pairs in Phi+."""
    return tensor(make_bell(0), make_bell(0))


def make_basis(bits: str) -> StateVector:
    """Computational basis state, e.g. ``"0101"``."""
    if not bits or set(bits) - {"0", "1"}:
        raise ParameterError(f"basis label must be a non-empty bitstring, got {bits!r}")
    check_register_size(len(bits), "basis state")
    amps = np.zeros(2 ** len(bits), dtype=np.complex128)
    amps[int(bits, 2)] = 1.0
    return StateVector(amps)


def make_product(factors: Iterable[Sequence[complex]]) -> StateVector:
    """Product of single-qubit states ``a|0> + b|1>``; each factor is normalized first."""
    qubits = [StateVector.normalized(np.asarray(f, dtype=np.complex128)) for f in factors]
    if not qubits:
        raise ParameterError("product state needs at least one factor")
    if any(q.n_qubits != 1 for q in qubits):
        raise ParameterError("each product factor must be a single qubit (a, b)")
    return tensor_all(*qubits)


def make_mems_purification(x: float) -> StateVector:
    """sqrt(1-x)|0101> + sqrt(x)/2 (|0000> + |0011> + |1100> + |1111>)."""
    if not 0.0 <= x <= 1.0:
        raise ParameterError(f"MEMS parameter x must lie in [0, 1], got {x}")
    amps = np.zeros(16, dtype=np.complex128)
    amps[0b0101] = np.sqrt(1.0 - x)
    for index in (0b0000, 0b0011, 0b1100, 0b1111):
        amps[index] = np.sqrt(x) / 2
    return StateVector(amps)


def make_werner(p: float) -> DensityMatrix:
    """p |Psi-><Psi-| + (1 - p) I/4."""
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"Werner parameter p must lie in [0, 1], got {p}")
    singlet = make_bell(3).amplitudes
    return DensityMatrix(p * np.outer(singlet, singlet.conj()) + (1.0 - p) * np.eye(4) / 4)


def make_random_pure(n: int, seed: int) -> StateVector:
    """Haar-random pure state: i.i.d. standard complex Gaussian amplitudes, normalized."""
    check_register_size(n, "random state")
    rng = np.random.default_rng(seed)
    amps = rng.standard_normal(2**n) + 1j * rng.standard_normal(2**n)
    return StateVector.normalized(amps)


def make_random_mixed(n: int, rank: int, seed: int) -> DensityMatrix:
    """Random density matrix ``G G^dagger / Tr`` with a ``2**n x rank`` Ginibre matrix ``G``."""
    check_register_size(n, "random state")
    if not 1 <= rank <= 2**n:
        raise ParameterError(f"rank must lie in 1..{2**n}, got {rank}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((2**n, rank)) + 1j * rng.standard_normal((2**n, rank))
    rho = g @ g.conj().T
    rho = (rho + rho.conj().T) / 2
    return DensityMatrix(rho / np.trace(rho).real)


def make_random_product_mixed(seed: int) -> DensityMatrix:
    """rho_A x rho_B of two independent random full-rank one-qubit states."""
    rng = np.random.default_rng(seed)
    seeds = rng.integers(0, 2**63 - 1, size=2)
    return tensor(make_random_mixed(1, 2, int(seeds[0])), make_random_mixed(1, 2, int(seeds[1])))
