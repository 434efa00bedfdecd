"""
Dense complex kernels for small qubit registers.

Everything here is a pure function over immutable ``StateVector`` /
``DensityMatrix`` values (or plain numpy arrays). Qubit indices are 1-based,
qubit 1 being the most significant bit.
"""

from __future__ import annotations

from functools import reduce
from typing import Sequence, Union, overload

import numpy as np

from numerics.types import ComplexMatrix, DensityMatrix, StateVector
from utils.errors import NotHermitianError, ParameterError, QubitIndexError

EIGEN_HERMITIAN_TOL = 1e-10
ENTROPY_CUTOFF = 1e-12

MatrixLike = Union[DensityMatrix, np.ndarray]


def _as_matrix(rho: MatrixLike) -> np.ndarray:
    if isinstance(rho, DensityMatrix):
        return rho.matrix
    return np.asarray(rho, dtype=np.complex128)


@overload
def tensor(a: StateVector, b: StateVector) -> StateVector: ...
@overload
def tensor(a: DensityMatrix, b: DensityMatrix) -> DensityMatrix: ...
@overload
def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray: ...


def tensor(a, b):
    """Kronecker product; the left operand's qubits come first (more significant)."""
    if isinstance(a, StateVector) and isinstance(b, StateVector):
        return StateVector(np.kron(a.amplitudes, b.amplitudes))
    if isinstance(a, DensityMatrix) and isinstance(b, DensityMatrix):
        return DensityMatrix(np.kron(a.matrix, b.matrix))
    if isinstance(a, (StateVector, DensityMatrix)) or isinstance(b, (StateVector, DensityMatrix)):
        raise TypeError("tensor operands must be of the same kind")
    return np.kron(np.asarray(a), np.asarray(b))


def tensor_all(*factors):
    """Left fold of :func:`tensor` over two or more factors."""
    if not factors:
        raise ParameterError("tensor_all needs at least one factor")
    return reduce(tensor, factors)


def _check_keep(n_qubits: int, keep: Sequence[int]) -> tuple[int, ...]:
    keep = tuple(int(q) for q in keep)
    if not keep:
        raise QubitIndexError("keep must name at least one qubit")
    if any(q < 1 or q > n_qubits for q in keep):
        raise QubitIndexError("qubit index out of range")
    if len(set(keep)) != len(keep):
        raise QubitIndexError("qubit indices must be distinct")
    return keep


def reduced_state(psi: StateVector, keep: Sequence[int]) -> DensityMatrix:
    """Reduced density matrix of a pure state, computed as ``M M^dagger``.

    ``M`` is the amplitude tensor reshaped to (kept qubits) x (traced qubits),
    so the full projector is never formed.
    """
    n = psi.n_qubits
    keep = _check_keep(n, keep)
    kept_axes = [q - 1 for q in keep]
    traced_axes = [ax for ax in range(n) if ax not in kept_axes]
    m = np.transpose(psi.tensor(), kept_axes + traced_axes).reshape(2 ** len(keep), -1)
    return DensityMatrix(m @ m.conj().T)


def partial_trace(rho: Union[DensityMatrix, StateVector], keep: Sequence[int]) -> DensityMatrix:
    """Trace out every qubit not in ``keep``; the result lists qubits in ``keep`` order."""
    if isinstance(rho, StateVector):
        return reduced_state(rho, keep)
    n = rho.n_qubits
    keep = _check_keep(n, keep)
    kept_axes = [q - 1 for q in keep]
    traced_axes = [ax for ax in range(n) if ax not in kept_axes]
    dk = 2 ** len(kept_axes)
    dt = 2 ** len(traced_axes)
    t = rho.matrix.reshape((2,) * (2 * n))
    row_axes = kept_axes + traced_axes
    col_axes = [n + ax for ax in row_axes]
    t = np.transpose(t, row_axes + col_axes).reshape(dk, dt, dk, dt)
    return DensityMatrix(np.trace(t, axis1=1, axis2=3))


def hermitian_eigensystem(h: MatrixLike) -> tuple[np.ndarray, ComplexMatrix]:
    """Eigenvalues (descending) and orthonormal eigenvector columns of a Hermitian matrix."""
    mat = _as_matrix(h)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ParameterError("eigensystem needs a square matrix")
    if np.max(np.abs(mat - mat.conj().T)) > EIGEN_HERMITIAN_TOL:
        raise NotHermitianError("matrix is not Hermitian")
    values, vectors = np.linalg.eigh(mat)
    return values[::-1].copy(), vectors[:, ::-1].copy()


def spectrum(rho: MatrixLike) -> np.ndarray:
    """Eigenvalues in descending order with round-off negatives clamped to 0."""
    values = np.linalg.eigvalsh(_as_matrix(rho))[::-1]
    return np.clip(values, 0.0, None)


def purity(rho: MatrixLike) -> float:
    """Tr[rho^2]."""
    mat = _as_matrix(rho)
    return float(np.vdot(mat, mat).real)


def von_neumann_entropy(rho: MatrixLike) -> float:
    """Von Neumann entropy in bits; eigenvalues below 1e-12 contribute nothing."""
    values = spectrum(rho)
    values = values[values > ENTROPY_CUTOFF]
    return float(-np.sum(values * np.log2(values)))
