"""
Mutual-information probe Fr(A, B).
"""

from __future__ import annotations

from evaluators.base import ProbeKind, require_two_qubits
from numerics.linalg import partial_trace, von_neumann_entropy
from numerics.types import DensityMatrix


def fr_probe(rho_ab: DensityMatrix) -> float:
    """Half the quantum mutual information, (S(rho_A) + S(rho_B) - S(rho_AB)) / 2, in bits."""
    require_two_qubits(rho_ab)
    s_a = von_neumann_entropy(partial_trace(rho_ab, [1]))
    s_b = von_neumann_entropy(partial_trace(rho_ab, [2]))
    return 0.5 * (s_a + s_b - von_neumann_entropy(rho_ab))


class MutualInfoEvaluator:
    name = "mutual_info_fr"
    kind = ProbeKind.MUTUAL_INFO_FR

    def evaluate(self, rho_ab: DensityMatrix) -> float:
        return fr_probe(rho_ab)
