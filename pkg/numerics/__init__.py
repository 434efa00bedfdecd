from .types import ComplexMatrix, DensityMatrix, StateVector
from .linalg import (
    hermitian_eigensystem,
    partial_trace,
    purity,
    reduced_state,
    spectrum,
    tensor,
    tensor_all,
    von_neumann_entropy,
)

__all__ = [
    "ComplexMatrix",
    "DensityMatrix",
    "StateVector",
    "hermitian_eigensystem",
    "partial_trace",
    "purity",
    "reduced_state",
    "spectrum",
    "tensor",
    "tensor_all",
    "von_neumann_entropy",
]
