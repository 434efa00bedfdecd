"""
Value types for qubit registers.

Basis ordering is big-endian: qubit 1 is the most significant bit, so the
amplitude at index ``i`` belongs to the bitstring ``format(i, f"0{n}b")`` read
as ``|q1 q2 ... qN>``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from utils.errors import InvalidStateError

ComplexMatrix = NDArray[np.complex128]

NORM_TOL = 1e-12
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10


def qubit_count(dim: int) -> int:
    """Return ``n`` with ``dim == 2**n``; raise if ``dim`` is not a power of two >= 2."""
    if dim < 2 or dim & (dim - 1):
        raise InvalidStateError("length must be a power of two", code="bad-length")
    return dim.bit_length() - 1


def _frozen(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalized pure state of ``n_qubits`` qubits."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        qubit_count(amps.size)
        if not np.all(np.isfinite(amps)):
            raise InvalidStateError("amplitudes must be finite")
        norm = float(np.vdot(amps, amps).real)
        if abs(norm - 1.0) > NORM_TOL:
            raise InvalidStateError(f"state is not normalized (norm^2={norm:.15g})")
        object.__setattr__(self, "amplitudes", _frozen(amps))

    @classmethod
    def normalized(cls, amplitudes) -> StateVector:
        amps = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        norm = np.linalg.norm(amps)
        if norm == 0 or not np.isfinite(norm):
            raise InvalidStateError("cannot normalize a zero or non-finite vector")
        return cls(amps / norm)

    @property
    def n_qubits(self) -> int:
        return qubit_count(self.amplitudes.size)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def tensor(self) -> np.ndarray:
        """Amplitudes reshaped to one axis per qubit, axis 0 = qubit 1."""
        return self.amplitudes.reshape((2,) * self.n_qubits)

    def projector(self) -> DensityMatrix:
        return DensityMatrix(np.outer(self.amplitudes, self.amplitudes.conj()))

    def allclose(self, other: StateVector, atol: float = 1e-12) -> bool:
        return self.dim == other.dim and np.allclose(self.amplitudes, other.amplitudes, atol=atol)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, positive semidefinite, unit-trace matrix over ``n_qubits`` qubits."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        mat = np.array(self.matrix, dtype=np.complex128)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise InvalidStateError("density matrix must be square", code="bad-shape")
        qubit_count(mat.shape[0])
        if not np.all(np.isfinite(mat)):
            raise InvalidStateError("density matrix entries must be finite")
        if np.max(np.abs(mat - mat.conj().T)) > HERMITIAN_TOL:
            raise InvalidStateError("density matrix is not Hermitian", code="not-hermitian")
        trace = np.trace(mat).real
        if abs(trace - 1.0) > TRACE_TOL:
            raise InvalidStateError(f"density matrix trace is {trace:.15g}, expected 1")
        if np.linalg.eigvalsh(mat)[0] < -PSD_TOL:
            raise InvalidStateError("density matrix has a negative eigenvalue")
        object.__setattr__(self, "matrix", _frozen(mat))

    @classmethod
    def from_state(cls, psi: StateVector) -> DensityMatrix:
        return psi.projector()

    @property
    def n_qubits(self) -> int:
        return qubit_count(self.matrix.shape[0])

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]
