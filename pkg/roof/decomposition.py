"""
Pure-state decompositions of a density matrix.

Every decomposition of rho into k >= r pure states is reached from its
eigendecomposition through a k x r isometry u:

    psi~_i = sum_j u_ij sqrt(lambda_j) |e_j>,    p_i = ||psi~_i||^2
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from numerics.linalg import hermitian_eigensystem
from numerics.types import ComplexMatrix, DensityMatrix, StateVector
from utils.errors import IsometryError

RANK_TOL = 1e-10
ISOMETRY_TOL = 1e-8
# members lighter than this carry no weight and are dropped
WEIGHT_FLOOR = 1e-15


@dataclass(frozen=True)
class Decomposition:
    weights: np.ndarray
    states: Tuple[StateVector, ...]

    @property
    def k(self) -> int:
        return len(self.states)

    def reconstruct(self) -> ComplexMatrix:
        """sum_i p_i |psi_i><psi_i|."""
        vectors = np.array([psi.amplitudes for psi in self.states])
        return (vectors.T * self.weights) @ vectors.conj()


def support(rho: DensityMatrix) -> Tuple[np.ndarray, ComplexMatrix]:
    """Eigenvalues above 1e-10 (descending) and their eigenvector columns."""
    values, vectors = hermitian_eigensystem(rho.matrix)
    keep = values > RANK_TOL
    return values[keep], vectors[:, keep]


def unnormalized_members(u: ComplexMatrix, values: np.ndarray, vectors: ComplexMatrix) -> ComplexMatrix:
    """Rows are the subnormalized vectors psi~_i."""
    return (u * np.sqrt(values)) @ vectors.T


def decomposition_from_isometry(rho: DensityMatrix, u: ComplexMatrix) -> Decomposition:
    values, vectors = support(rho)
    u = np.asarray(u, dtype=np.complex128)
    r = len(values)
    if u.ndim != 2 or u.shape[1] != r or u.shape[0] < r:
        raise IsometryError(f"isometry must be k x {r} with k >= {r}, got shape {u.shape}")
    deviation = float(np.max(np.abs(u.conj().T @ u - np.eye(r))))
    if deviation > ISOMETRY_TOL:
        raise IsometryError(f"columns are not orthonormal (deviation {deviation:.3g})")

    members = unnormalized_members(u, values, vectors)
    weights = np.sum(np.abs(members) ** 2, axis=1)
    keep = weights > WEIGHT_FLOOR
    states: List[StateVector] = [
        StateVector(row / np.sqrt(w)) for row, w in zip(members[keep], weights[keep])
    ]
    kept = weights[keep]
    return Decomposition(weights=kept / kept.sum(), states=tuple(states))


def eigendecomposition(rho: DensityMatrix) -> Decomposition:
    r = len(support(rho)[0])
    return decomposition_from_isometry(rho, np.eye(r, dtype=np.complex128))
