"""
Table of pair-probe values P(A, B) over every unordered qubit pair.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Tuple, Union

import numpy as np

from evaluators.base import PairProbe, ProbeKind
from evaluators.registry import get_evaluator
from numerics.linalg import partial_trace
from numerics.types import DensityMatrix, StateVector
from utils.errors import ParameterError, QubitIndexError

logger = logging.getLogger(__name__)

# round-off below this is reported as an exact zero
NEGATIVE_ROUNDOFF = 1e-12

Pair = Tuple[int, int]


@dataclass(frozen=True)
class PairProbeMatrix:
    """
    Symmetric probe table; ``values`` is keyed by 1-based pairs ``(a, b)`` with a < b,
    in lexicographic order.
    """

    n_qubits: int
    probe: ProbeKind
    values: Dict[Pair, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        expected = self.n_qubits * (self.n_qubits - 1) // 2
        if len(self.values) != expected:
            raise ParameterError(f"expected {expected} pair values, got {len(self.values)}")
        for pair, value in self.values.items():
            if not np.isfinite(value) or value < 0:
                raise ParameterError(f"pair {pair} has invalid probe value {value}")

    def get(self, a: int, b: int) -> float:
        if a == b:
            raise QubitIndexError("a pair needs two distinct qubits")
        key = (min(a, b), max(a, b))
        if key not in self.values:
            raise QubitIndexError("qubit index out of range")
        return self.values[key]

    def pairs(self) -> List[Pair]:
        return list(self.values)

    def as_array(self) -> np.ndarray:
        """Pair values in lexicographic pair order."""
        return np.array(list(self.values.values()), dtype=float)

    def as_matrix(self) -> np.ndarray:
        """Full N x N symmetric table with a zero diagonal."""
        table = np.zeros((self.n_qubits, self.n_qubits))
        for (a, b), value in self.values.items():
            table[a - 1, b - 1] = table[b - 1, a - 1] = value
        return table


def pair_probe_matrix(
    state: Union[StateVector, DensityMatrix], probe: Union[ProbeKind, str, PairProbe]
) -> PairProbeMatrix:
    """Evaluate ``probe`` on the two-qubit reduction of every unordered pair of ``state``."""
    evaluator = probe if hasattr(probe, "evaluate") else get_evaluator(probe)  # type: ignore[arg-type]
    n = state.n_qubits
    if n < 2:
        raise ParameterError("pair probes need at least two qubits")

    values: Dict[Pair, float] = {}
    for a, b in combinations(range(1, n + 1), 2):
        value = float(evaluator.evaluate(partial_trace(state, [a, b])))
        if -NEGATIVE_ROUNDOFF < value < 0:
            value = 0.0
        values[(a, b)] = value

    logger.debug(
        "pair probe matrix",
        extra={"probe": evaluator.name, "n_qubits": n, "pair_count": len(values)},
    )
    return PairProbeMatrix(n_qubits=n, probe=evaluator.kind, values=values)
