from .base import PairProbe, ProbeKind
from .spectra import SqrtEigenvalues, spin_flip, sqrt_spectrum
from .quasi_concurrence_evaluator import QuasiConcurrenceEvaluator, quasi_concurrence
from .mutual_info_evaluator import MutualInfoEvaluator, fr_probe
from .concurrence_evaluator import (
    binary_entropy,
    entanglement_of_formation,
    wootters_concurrence,
)
from .registry import EVALUATORS, get_evaluator
from .pair_matrix import PairProbeMatrix, pair_probe_matrix

__all__ = [
    "EVALUATORS",
    "PairProbe",
    "PairProbeMatrix",
    "ProbeKind",
    "SqrtEigenvalues",
    "QuasiConcurrenceEvaluator",
    "MutualInfoEvaluator",
    "binary_entropy",
    "entanglement_of_formation",
    "fr_probe",
    "get_evaluator",
    "pair_probe_matrix",
    "quasi_concurrence",
    "spin_flip",
    "sqrt_spectrum",
    "wootters_concurrence",
]
