from .averages import (
    ZERO_THRESHOLD,
    Average,
    arithmetic_measure,
    average_measure,
    geometric_measure,
    normalization,
    pure_measure,
)
from .classification import DEFAULT_TOLERANCE, ClassLabel, Homogeneity, classify
from .report import UNIT_BOUND_SLACK, MeasureReport

__all__ = [
    "ZERO_THRESHOLD",
    "DEFAULT_TOLERANCE",
    "UNIT_BOUND_SLACK",
    "Average",
    "ClassLabel",
    "Homogeneity",
    "MeasureReport",
    "arithmetic_measure",
    "average_measure",
    "classify",
    "geometric_measure",
    "normalization",
    "pure_measure",
]
