"""
Pair-averaged entanglement analysis pipeline.

An analysis runs four traced steps over a pure register state:
    1. Reduce the state to every two-qubit pair
    2. Evaluate the chosen pair probe on each reduction
    3. Average the table arithmetically (M) and geometrically (G)
    4. Classify the table (global / partial / none, homogeneous or not)
"""

from __future__ import annotations

import logging
from math import comb
from typing import Any, Dict, Optional, Union

from evaluators import PairProbeMatrix, ProbeKind, get_evaluator, pair_probe_matrix
from measures import (
    DEFAULT_TOLERANCE,
    MeasureReport,
    arithmetic_measure,
    classify,
    geometric_measure,
    normalization,
)
from numerics.types import DensityMatrix, StateVector
from tracing.tracer import Tracer
from utils.errors import ParameterError

MAX_MEASURE_QUBITS = 12


class EntanglementAnalyzer:
    """
    Runs the reduce → probe → average → classify pipeline and traces each step.

    Attributes:
        probe: Pair probe used for every report
        tolerance: Classification tolerance
        tracer: Tracer recording one span per pipeline step
        logger: Logger for debugging

    Example:
        >>> analyzer = EntanglementAnalyzer(probe="fr")
        >>> report = analyzer.analyze(make_ghz(4))
        >>> report.m, report.classification.value
        (1.0, 'globally-entangled')
    """

    def __init__(
        self,
        probe: Union[ProbeKind, str] = ProbeKind.MUTUAL_INFO_FR,
        tolerance: float = DEFAULT_TOLERANCE,
        tracer: Optional[Tracer] = None,
        logger: Optional[logging.Logger] = None,
    ):
        self.probe = ProbeKind(probe)
        self.tolerance = tolerance
        self.tracer = tracer or Tracer()
        self.logger = logger or logging.getLogger(__name__)
        self.evaluator = get_evaluator(self.probe)

        self.logger.debug(
            f"EntanglementAnalyzer initialized: probe={self.probe.value}, tolerance={tolerance}"
        )

    def probe_pairs(self, state: Union[StateVector, DensityMatrix]) -> PairProbeMatrix:
        with self.tracer.span("probe_pairs", probe=self.probe.value, n_qubits=state.n_qubits) as out:
            pm = pair_probe_matrix(state, self.evaluator)
            out["pair_count"] = len(pm.values)
            out["values"] = {f"{a},{b}": v for (a, b), v in pm.values.items()}
        return pm

    def average(self, pm: PairProbeMatrix) -> Dict[str, float]:
        with self.tracer.span("average", pair_count=len(pm.values)) as out:
            out["m"] = arithmetic_measure(pm)
            out["g"] = geometric_measure(pm)
            out["normalization"] = normalization(pm.probe, pm.n_qubits)
        return out

    def classify(self, pm: PairProbeMatrix) -> Dict[str, Any]:
        with self.tracer.span("classify", tolerance=self.tolerance) as out:
            label, homogeneity = classify(pm, self.tolerance)
            out["class"] = label
            out["homogeneity"] = homogeneity
        return out

    def analyze(self, state: StateVector, label: str = "state") -> MeasureReport:
        """Build the full report for a pure state of 2 to 12 qubits."""
        if not isinstance(state, StateVector):
            raise ParameterError("measure needs a pure state; use the convex roof for density matrices")
        n = state.n_qubits
        if not 2 <= n <= MAX_MEASURE_QUBITS:
            raise ParameterError(f"measure supports 2..{MAX_MEASURE_QUBITS} qubits, got {n}")

        self.tracer.start_trace(label, probe=self.probe.value, n_qubits=n)
        pm = self.probe_pairs(state)
        averages = self.average(pm)
        classification = self.classify(pm)
        trace = self.tracer.end_trace()

        report = MeasureReport(
            n_qubits=n,
            probe=self.probe,
            pairs=pm,
            m=averages["m"],
            g=averages["g"],
            normalization=averages["normalization"],
            pair_count=comb(n, 2),
            classification=classification["class"],
            homogeneity=classification["homogeneity"],
            tolerance=self.tolerance,
        )
        if report.exceeds_unit_bound:
            self.logger.warning(
                "pair average exceeds 1",
                extra={"m": report.m, "g": report.g, "probe": self.probe.value},
            )
        self.logger.debug(
            "analysis completed",
            extra={"label": label, "m": report.m, "g": report.g, "latency_ms": trace["latency_ms"]},
        )
        return report


def measure_report(
    state: StateVector,
    probe: Union[ProbeKind, str],
    tol: float = DEFAULT_TOLERANCE,
    tracer: Optional[Tracer] = None,
) -> MeasureReport:
    return EntanglementAnalyzer(probe=probe, tolerance=tol, tracer=tracer).analyze(state)
