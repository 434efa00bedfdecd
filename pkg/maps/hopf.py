"""
Hopf-bundle-like maps of two- and three-qubit states.

Quaternions and octonions are never built as an algebra: a map image is kept
as its complex component slots. For two qubits the amplitude pair
``q1 = a0 + a1 i2``, ``q2 = b0 + b1 i2`` is sent to
``(2 q2 conj(q1), |q1|^2 - |q2|^2)``, whose slots are

    c_off  = 2 (b0 conj(a0) + b1 conj(a1))     # 2 conj(rho_1[0,1])
    c_conc = 2 (b1 a0 - b0 a1)                 # i2 slot, |c_conc| is the concurrence
    z      = |a0|^2 + |a1|^2 - |b0|^2 - |b1|^2 # rho_1[0,0] - rho_1[1,1]

For three qubits the amplitudes are named by bitstring
``000 a0, 001 a1, 010 b0, 011 b1, 100 d0, 101 d1, 110 g0, 111 g1`` and the
octonion pair ``o1 = q1 + q2 i4``, ``o2 = q3 + q4 i4`` (with the conjugated
slots ``q2 = b0 + conj(b1) i2``, ``q4 = g0 + conj(g1) i2``) is sent to
``(2 C1 + 2 C2 i2 + 2 C3 i4 + 2 C4 i6, |o1|^2 - |o2|^2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from numerics.types import StateVector
from utils.errors import ParameterError

THREE_QUBIT_NAMES = ("a0", "a1", "b0", "b1", "d0", "d1", "g0", "g1")


@dataclass(frozen=True)
class MapImage2:
    c_off: complex
    c_conc: complex
    z: float

    @property
    def norm_squared(self) -> float:
        return abs(self.c_off) ** 2 + abs(self.c_conc) ** 2 + self.z**2


@dataclass(frozen=True)
class MapImage3:
    c1: complex
    c2: complex
    c3: complex
    c4: complex
    z: float

    @property
    def coefficients(self) -> tuple[complex, complex, complex, complex]:
        return (self.c1, self.c2, self.c3, self.c4)

    @property
    def norm_squared(self) -> float:
        return sum(abs(2 * c) ** 2 for c in self.coefficients) + self.z**2

    def allclose(self, other: MapImage3, atol: float = 1e-12) -> bool:
        mine = np.array([*self.coefficients, self.z])
        theirs = np.array([*other.coefficients, other.z])
        return bool(np.allclose(mine, theirs, atol=atol, rtol=0.0))


def _require_qubits(psi: StateVector, n: int) -> None:
    if psi.n_qubits != n:
        raise ParameterError(f"expected a {n}-qubit state, got {psi.n_qubits} qubits")


def _two_qubit_image(a0: complex, a1: complex, b0: complex, b1: complex) -> MapImage2:
    return MapImage2(
        c_off=complex(2 * (b0 * np.conj(a0) + b1 * np.conj(a1))),
        c_conc=complex(2 * (b1 * a0 - b0 * a1)),
        z=float(abs(a0) ** 2 + abs(a1) ** 2 - abs(b0) ** 2 - abs(b1) ** 2),
    )


def two_qubit_map(psi: StateVector) -> MapImage2:
    """Image carrying qubit 1's reduced state and the concurrence slot."""
    _require_qubits(psi, 2)
    a0, a1, b0, b1 = psi.amplitudes
    return _two_qubit_image(a0, a1, b0, b1)


def two_qubit_map_swapped(psi: StateVector) -> MapImage2:
    """The same map with the qubit labels exchanged (a1 <-> b0): carries qubit 2."""
    _require_qubits(psi, 2)
    a0, a1, b0, b1 = psi.amplitudes
    return _two_qubit_image(a0, b0, a1, b1)


def named_amplitudes(psi: StateVector) -> dict[str, complex]:
    _require_qubits(psi, 3)
    return dict(zip(THREE_QUBIT_NAMES, (complex(v) for v in psi.amplitudes)))


def three_qubit_image(amps: Mapping[str, complex]) -> MapImage3:
    """Evaluate C1..C4 and z from named amplitudes."""
    a0, a1, b0, b1, d0, d1, g0, g1 = (amps[name] for name in THREE_QUBIT_NAMES)
    cj = np.conj
    c1 = cj(a0) * d0 + d1 * cj(a1) + g0 * cj(b0) + cj(b1) * g1
    c2 = -a1 * d0 + d1 * a0 - (cj(b1) * cj(g0) - cj(g1) * cj(b0))
    c3 = -b0 * d0 + g0 * a0 - (cj(a1) * cj(g1) - cj(d1) * cj(b1))
    c4 = -cj(d1) * cj(b0) + cj(a1) * cj(g0) - (b1 * d0 - g1 * a0)
    upper = abs(a0) ** 2 + abs(a1) ** 2 + abs(b0) ** 2 + abs(b1) ** 2
    lower = abs(d0) ** 2 + abs(d1) ** 2 + abs(g0) ** 2 + abs(g1) ** 2
    return MapImage3(complex(c1), complex(c2), complex(c3), complex(c4), float(upper - lower))


def three_qubit_map(psi: StateVector) -> MapImage3:
    """Image of a 3-qubit state; z equals rho_1[0,0] - rho_1[1,1]."""
    return three_qubit_image(named_amplitudes(psi))


def vanishing_pattern(image: MapImage3, tol: float = 1e-12) -> tuple[bool, bool, bool]:
    """Which of C2, C3, C4 vanish; ``|1> x |23>`` gives (True, True, True)."""
    return tuple(abs(c) <= tol for c in (image.c2, image.c3, image.c4))  # type: ignore[return-value]
