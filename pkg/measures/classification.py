"""
Entanglement-type labels derived from a pair-probe table.
"""

from __future__ import annotations

from enum import Enum
from typing import Tuple

from evaluators import PairProbeMatrix
from utils.errors import ParameterError

DEFAULT_TOLERANCE = 1e-9


class ClassLabel(str, Enum):
    FULLY_FACTORIZABLE = "fully-factorizable"
    PARTIALLY_ENTANGLED = "partially-entangled"
    GLOBALLY_ENTANGLED = "globally-entangled"


class Homogeneity(str, Enum):
    HOMOGENEOUS = "homogeneous"
    HETEROGENEOUS = "heterogeneous"


def classify(pm: PairProbeMatrix, tol: float = DEFAULT_TOLERANCE) -> Tuple[ClassLabel, Homogeneity]:
    """
    Globally entangled when every pair value exceeds ``tol``, fully factorizable
    when none does, partially entangled otherwise. Homogeneity compares the
    absolute spread of the pair values with ``tol``.
    """
    if tol <= 0:
        raise ParameterError(f"tolerance must be positive, got {tol}")
    values = pm.as_array()
    entangled = values > tol
    if entangled.all():
        label = ClassLabel.GLOBALLY_ENTANGLED
    elif not entangled.any():
        label = ClassLabel.FULLY_FACTORIZABLE
    else:
        label = ClassLabel.PARTIALLY_ENTANGLED
    spread = float(values.max() - values.min())
    homogeneity = Homogeneity.HOMOGENEOUS if spread <= tol else Homogeneity.HETEROGENEOUS
    return label, homogeneity
