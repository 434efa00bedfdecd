"""
Qubit relabelings and the permutation family of three-qubit maps.

A ``Permutation`` is written the way the relabelings are named, e.g.
``(123) -> (312)``: ``image[i - 1]`` is the new position of original qubit
``i``. So ``(312)`` moves qubit 1 to position 3, qubit 2 to position 1 and
qubit 3 to position 2, and the map of the relabeled state carries the reduced
state of qubit 2 (its ``distinguished_qubit``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Dict, Iterator, Literal, Mapping

import numpy as np

from maps.hopf import MapImage3, named_amplitudes, three_qubit_image, three_qubit_map
from numerics.types import StateVector
from utils.errors import ParameterError


@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        image = tuple(int(i) for i in self.image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ParameterError(f"{image} is not a permutation of 1..{len(image)}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_label(cls, label: str) -> Permutation:
        """``"312"`` or ``"(312)"`` -> Permutation((3, 1, 2))."""
        digits = label.strip().strip("()")
        if not digits.isdigit():
            raise ParameterError(f"bad permutation label {label!r}")
        return cls(tuple(int(ch) for ch in digits))

    @property
    def n(self) -> int:
        return len(self.image)

    @property
    def label(self) -> str:
        return "(" + "".join(str(i) for i in self.image) + ")"

    def __call__(self, qubit: int) -> int:
        return self.image[qubit - 1]

    def compose(self, other: Permutation) -> Permutation:
        """``self o other``: apply ``other`` first, then ``self``."""
        if other.n != self.n:
            raise ParameterError("cannot compose permutations of different sizes")
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> Permutation:
        inverse = [0] * self.n
        for original, position in enumerate(self.image, start=1):
            inverse[position - 1] = original
        return Permutation(tuple(inverse))

    @property
    def distinguished_qubit(self) -> int:
        """Original qubit that lands in position 1."""
        return self.inverse()(1)


def all_permutations(n: int) -> Iterator[Permutation]:
    """Every element of S_n in lexicographic order, identity first."""
    for image in _itertools_permutations(range(1, n + 1)):
        yield Permutation(image)


def permute_state(psi: StateVector, perm: Permutation) -> StateVector:
    """Move the amplitude of bitstring ``b`` to the bitstring with ``b'[perm(i)] = b[i]``."""
    if perm.n != psi.n_qubits:
        raise ParameterError(
            f"permutation acts on {perm.n} qubits but the state has {psi.n_qubits}"
        )
    axes = [q - 1 for q in perm.inverse().image]
    return StateVector(np.transpose(psi.tensor(), axes).reshape(-1))


# Amplitude exchanges induced by each relabeling of three qubits: in the C1..C4
# formulas every symbol on the left is replaced by the one on the right.
AMPLITUDE_RELABELINGS: Dict[str, Dict[str, str]] = {
    "(123)": {},
    "(213)": {"b1": "d1", "d0": "b0", "b0": "d0", "d1": "b1"},
    "(321)": {"a1": "d0", "b1": "g0", "d0": "a1", "g0": "b1"},
    "(132)": {"a1": "b0", "b0": "a1", "d1": "g0", "g0": "d1"},
    "(312)": {"a1": "d0", "b0": "a1", "b1": "d1", "d1": "g0", "d0": "b0", "g0": "b1"},
    "(231)": {"a1": "b0", "b0": "d0", "b1": "g0", "d0": "a1", "d1": "b1", "g0": "d1"},
}


def relabel_amplitudes(amps: Mapping[str, complex], perm: Permutation) -> dict[str, complex]:
    table = AMPLITUDE_RELABELINGS[perm.label]
    return {name: amps[table.get(name, name)] for name in amps}


def permuted_three_qubit_map(
    psi: StateVector,
    perm: Permutation,
    method: Literal["relabel", "permute"] = "relabel",
) -> MapImage3:
    """
    Map of the relabeled 3-qubit state.

    ``method="relabel"`` evaluates the coefficient formulas on the exchanged
    amplitude symbols; ``method="permute"`` relabels the state vector and maps
    it. Both give the same image; z is the population difference of
    ``perm.distinguished_qubit``.
    """
    if perm.n != 3:
        raise ParameterError(f"{perm.label} is not an element of S_3")
    if method == "relabel":
        return three_qubit_image(relabel_amplitudes(named_amplitudes(psi), perm))
    if method == "permute":
        return three_qubit_map(permute_state(psi, perm))
    raise ParameterError(f"unknown method {method!r}")
