"""
Shared pieces of the pair-probe evaluators.
"""

from __future__ import annotations

from enum import Enum
from typing import Protocol

from numerics.types import DensityMatrix
from utils.errors import ParameterError


class ProbeKind(str, Enum):
    QUASI_CONCURRENCE = "qc"
    MUTUAL_INFO_FR = "fr"


class PairProbe(Protocol):
    """
    Interface every pair probe implements.

    ``evaluate`` receives the two-qubit reduced density matrix of a pair and
    returns the probe value P(A, B) >= 0.
    """

    name: str
    kind: ProbeKind

    def evaluate(self, rho_ab: DensityMatrix) -> float:
        ...


def require_two_qubits(rho: DensityMatrix) -> None:
    if rho.n_qubits != 2:
        raise ParameterError(f"expected a two-qubit density matrix, got {rho.n_qubits} qubits")
