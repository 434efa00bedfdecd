"""
Probe registry: one evaluator instance per ProbeKind.
"""

from __future__ import annotations

from typing import Dict, Union

from evaluators.base import PairProbe, ProbeKind
from evaluators.mutual_info_evaluator import MutualInfoEvaluator
from evaluators.quasi_concurrence_evaluator import QuasiConcurrenceEvaluator
from utils.errors import ParameterError

EVALUATORS: Dict[ProbeKind, PairProbe] = {
    ProbeKind.QUASI_CONCURRENCE: QuasiConcurrenceEvaluator(),
    ProbeKind.MUTUAL_INFO_FR: MutualInfoEvaluator(),
}


def get_evaluator(kind: Union[ProbeKind, str]) -> PairProbe:
    """Look up the evaluator for a probe kind (``"qc"`` or ``"fr"``)."""
    try:
        return EVALUATORS[ProbeKind(kind)]
    except ValueError:
        raise ParameterError(f"Unknown probe: {kind}") from None
