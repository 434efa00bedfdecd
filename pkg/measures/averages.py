"""
Arithmetic (M) and geometric (G) pair-averaged measures.

    M = N(P) * mean over pairs of P(A, B)
    G = N(P) * (prod over pairs of P(A, B)) ** (1 / C(N, 2))

N(P) is 1 for the quasi-concurrence and ``1 + (d - 1)(1 - delta_{2,N})`` for
the Fr probe, i.e. 1 for two qubits and 2 otherwise.
"""

from __future__ import annotations

from enum import Enum
from typing import Union

import numpy as np

from evaluators import PairProbeMatrix, ProbeKind, pair_probe_matrix
from maps.hopf import two_qubit_map
from numerics.linalg import reduced_state, von_neumann_entropy
from numerics.types import StateVector
from utils.errors import ParameterError

ZERO_THRESHOLD = 1e-12


class Average(str, Enum):
    ARITHMETIC = "arithmetic"
    GEOMETRIC = "geometric"


def normalization(probe: Union[ProbeKind, str], n: int, d: int = 2) -> float:
    if d != 2:
        raise ParameterError("qudit normalization out of scope")
    if n < 2:
        raise ParameterError(f"normalization needs n >= 2, got {n}")
    if ProbeKind(probe) is ProbeKind.QUASI_CONCURRENCE:
        return 1.0
    return 1.0 if n == 2 else float(d)


def arithmetic_measure(pm: PairProbeMatrix) -> float:
    return normalization(pm.probe, pm.n_qubits) * float(np.mean(pm.as_array()))


def geometric_measure(pm: PairProbeMatrix) -> float:
    """Normalized geometric mean of the pair values; exactly 0 once any value drops below 1e-12."""
    values = pm.as_array()
    if np.any(values < ZERO_THRESHOLD):
        return 0.0
    return normalization(pm.probe, pm.n_qubits) * float(np.exp(np.mean(np.log(values))))


def average_measure(pm: PairProbeMatrix, average: Union[Average, str]) -> float:
    if Average(average) is Average.ARITHMETIC:
        return arithmetic_measure(pm)
    return geometric_measure(pm)


def pure_measure(
    psi: StateVector, probe: Union[ProbeKind, str], average: Union[Average, str]
) -> float:
    """
    M or G of a pure state.

    Two qubits have a single pair, so both averages collapse to the probe value:
    ``|c_conc| = 2|a0 b1 - a1 b0|`` for the quasi-concurrence and ``S(rho_1)``
    for Fr.
    """
    probe = ProbeKind(probe)
    if psi.n_qubits == 2:
        if probe is ProbeKind.QUASI_CONCURRENCE:
            return abs(two_qubit_map(psi).c_conc)
        return von_neumann_entropy(reduced_state(psi, [1]))
    return average_measure(pair_probe_matrix(psi, probe), average)

