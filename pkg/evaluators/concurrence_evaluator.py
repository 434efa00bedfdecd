"""
Wootters concurrence and entanglement of formation (two-qubit closed forms).
"""

from __future__ import annotations

import numpy as np

from evaluators.spectra import sqrt_spectrum
from numerics.types import DensityMatrix


def wootters_concurrence(rho: DensityMatrix) -> float:
    """max{0, lambda_1 - lambda_2 - lambda_3 - lambda_4}."""
    l1, l2, l3, l4 = sqrt_spectrum(rho).lambdas
    return max(0.0, l1 - l2 - l3 - l4)


def binary_entropy(p: float) -> float:
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return float(-p * np.log2(p) - (1 - p) * np.log2(1 - p))


def entanglement_of_formation(rho: DensityMatrix) -> float:
    """h((1 + sqrt(1 - C^2)) / 2) in bits."""
    c = min(1.0, wootters_concurrence(rho))
    return binary_entropy((1.0 + np.sqrt(1.0 - c * c)) / 2.0)
