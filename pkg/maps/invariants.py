"""
K-invariants and the single- and m-qubit linear-entropy measures.
"""

from __future__ import annotations

import logging
from itertools import combinations
from math import comb
from typing import Union

import numpy as np

from maps.hopf import MapImage2, MapImage3, two_qubit_map, two_qubit_map_swapped
from maps.permutations import all_permutations, permute_state, permuted_three_qubit_map
from numerics.linalg import purity, reduced_state
from numerics.types import StateVector
from utils.errors import ParameterError

logger = logging.getLogger(__name__)

K_CONSISTENCY_TOL = 1e-10
MAX_PERMUTATION_AVERAGE_QUBITS = 4


def k_invariant(image: Union[MapImage2, MapImage3]) -> float:
    """
    Squared norm of the entanglement slots of a map image.

    For three qubits ``K = |2C2|^2 + |2C3|^2 + |2C4|^2``, which for a
    normalized state also equals ``1 - |2C1|^2 - z^2`` and ``2 (1 - Tr[rho^2])``
    of the distinguished qubit. For two qubits ``K = |c_conc|^2``.
    """
    if isinstance(image, MapImage2):
        component_sum = abs(image.c_conc) ** 2
        complement = 1.0 - abs(image.c_off) ** 2 - image.z**2
    else:
        component_sum = sum(abs(2 * c) ** 2 for c in (image.c2, image.c3, image.c4))
        complement = 1.0 - abs(2 * image.c1) ** 2 - image.z**2
    if abs(component_sum - complement) > K_CONSISTENCY_TOL:
        logger.warning(
            "K-invariant forms disagree",
            extra={"component_sum": component_sum, "complement": complement},
        )
    return float(component_sum)


def single_qubit_linear_entropies(psi: StateVector) -> list[float]:
    """``Q_i = 2 (1 - Tr[rho_i^2])`` for every qubit ``i``."""
    return [2.0 * (1.0 - purity(reduced_state(psi, [q]))) for q in range(1, psi.n_qubits + 1)]


def meyer_wallach_permutation_average(psi: StateVector) -> float:
    """
    Average of K over every relabeling of the register (N <= 4).

    Two and three qubits go through the Clifford maps; four qubits use the
    purity form of K on the relabeled state.
    """
    n = psi.n_qubits
    if n < 2 or n > MAX_PERMUTATION_AVERAGE_QUBITS:
        raise ParameterError(
            f"permutation average supports 2..{MAX_PERMUTATION_AVERAGE_QUBITS} qubits, got {n}"
        )
    values = []
    for perm in all_permutations(n):
        if n == 2:
            image = two_qubit_map(psi) if perm.distinguished_qubit == 1 else two_qubit_map_swapped(psi)
            values.append(k_invariant(image))
        elif n == 3:
            values.append(k_invariant(permuted_three_qubit_map(psi, perm)))
        else:
            relabeled = permute_state(psi, perm)
            values.append(2.0 * (1.0 - purity(reduced_state(relabeled, [1]))))
    return float(np.mean(values))


def meyer_wallach(psi: StateVector) -> float:
    """Meyer-Wallach-Brennen measure ``(1/N) sum_i 2 (1 - Tr[rho_i^2])``."""
    if psi.n_qubits < 2:
        raise ParameterError(f"Meyer-Wallach measure needs N >= 2, got {psi.n_qubits}")
    value = float(np.mean(single_qubit_linear_entropies(psi)))
    if psi.n_qubits <= MAX_PERMUTATION_AVERAGE_QUBITS:
        cross_check = meyer_wallach_permutation_average(psi)
        if abs(cross_check - value) > K_CONSISTENCY_TOL:
            logger.warning(
                "permutation average disagrees with purity average",
                extra={"purity_average": value, "permutation_average": cross_check},
            )
    return value


def scott_q(psi: StateVector, m: int) -> float:
    """Average normalized linear entropy of all m-qubit reductions."""
    n = psi.n_qubits
    if not 1 <= m <= n // 2:
        raise ParameterError(f"m must lie in 1..{n // 2} for {n} qubits, got {m}")
    scale = 2**m / (2**m - 1)
    kernels = [
        scale * (1.0 - purity(reduced_state(psi, subset)))
        for subset in combinations(range(1, n + 1), m)
    ]
    return float(np.sum(kernels) / comb(n, m))
