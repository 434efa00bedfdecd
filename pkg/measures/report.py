from __future__ import annotations

from dataclasses import dataclass

from evaluators import PairProbeMatrix, ProbeKind
from measures.classification import ClassLabel, Homogeneity

# M or G above 1 + this is flagged, never clamped
UNIT_BOUND_SLACK = 1e-9


@dataclass(frozen=True)
class MeasureReport:
    """Pair table, both averages and the classification of one pure state."""

    n_qubits: int
    probe: ProbeKind
    pairs: PairProbeMatrix
    m: float
    g: float
    normalization: float
    pair_count: int
    classification: ClassLabel
    homogeneity: Homogeneity
    tolerance: float

    @property
    def exceeds_unit_bound(self) -> bool:
        return self.m > 1 + UNIT_BOUND_SLACK or self.g > 1 + UNIT_BOUND_SLACK
