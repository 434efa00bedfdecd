"""
Quasi-concurrence probe.
"""

from __future__ import annotations

from evaluators.base import ProbeKind
from evaluators.spectra import sqrt_spectrum
from numerics.types import DensityMatrix


def quasi_concurrence(rho: DensityMatrix) -> float:
    """lambda_1 + lambda_2 - lambda_3 - lambda_4; zero on factorizable rho_A x rho_B."""
    l1, l2, l3, l4 = sqrt_spectrum(rho).lambdas
    return l1 + l2 - l3 - l4


class QuasiConcurrenceEvaluator:
    """
    Pair probe built on the concurrence spectrum; equals the concurrence on pure pairs.
    """

    name = "quasi_concurrence"
    kind = ProbeKind.QUASI_CONCURRENCE

    def evaluate(self, rho_ab: DensityMatrix) -> float:
        return quasi_concurrence(rho_ab)
