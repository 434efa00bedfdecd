"""
Spin-flip transform and the sqrt(rho rho~) spectrum shared by the concurrence-type probes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from evaluators.base import require_two_qubits
from numerics.linalg import hermitian_eigensystem, spectrum
from numerics.types import ComplexMatrix, DensityMatrix

SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_YY = np.kron(SIGMA_Y, SIGMA_Y)
# eigenvalues of sqrt(rho) rho~ sqrt(rho) below this are round-off
SPECTRUM_FLOOR = 1e-14


@dataclass(frozen=True)
class SqrtEigenvalues:
    """lambda_1 >= lambda_2 >= lambda_3 >= lambda_4 >= 0."""

    lambdas: tuple[float, float, float, float]


def spin_flip(rho: DensityMatrix) -> ComplexMatrix:
    """(sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y)."""
    require_two_qubits(rho)
    return SIGMA_YY @ rho.matrix.conj() @ SIGMA_YY


def sqrt_spectrum(rho: DensityMatrix) -> SqrtEigenvalues:
    """
    Square roots of the eigenvalues of rho rho~, in decreasing order.

    rho rho~ is not Hermitian, so its spectrum is taken from the similar
    Hermitian PSD matrix sqrt(rho) rho~ sqrt(rho).
    """
    tilde = spin_flip(rho)
    values, vectors = hermitian_eigensystem(rho.matrix)
    root = (vectors * np.sqrt(np.clip(values, 0.0, None))) @ vectors.conj().T
    product = root @ tilde @ root
    product = (product + product.conj().T) / 2
    eigenvalues = spectrum(product)
    eigenvalues[eigenvalues < SPECTRUM_FLOOR] = 0.0
    lambdas = np.sqrt(eigenvalues)
    return SqrtEigenvalues(tuple(float(v) for v in lambdas))  # type: ignore[arg-type]
