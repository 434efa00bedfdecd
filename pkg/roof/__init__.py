from .decomposition import Decomposition, decomposition_from_isometry, eigendecomposition
from .optimizer import (
    DEFAULT_BUDGET,
    DEFAULT_RESTARTS,
    ORACLE_CONFIRMED,
    ROOF_UPPER_BOUND,
    RoofResult,
    roof_measure,
    two_qubit_oracle,
)

__all__ = [
    "DEFAULT_BUDGET",
    "DEFAULT_RESTARTS",
    "ORACLE_CONFIRMED",
    "ROOF_UPPER_BOUND",
    "Decomposition",
    "RoofResult",
    "decomposition_from_isometry",
    "eigendecomposition",
    "roof_measure",
    "two_qubit_oracle",
]
