from .hopf import (
    MapImage2,
    MapImage3,
    three_qubit_map,
    two_qubit_map,
    two_qubit_map_swapped,
    vanishing_pattern,
)
from .permutations import (
    AMPLITUDE_RELABELINGS,
    Permutation,
    all_permutations,
    permute_state,
    permuted_three_qubit_map,
)
from .invariants import (
    k_invariant,
    meyer_wallach,
    meyer_wallach_permutation_average,
    scott_q,
    single_qubit_linear_entropies,
)

__all__ = [
    "MapImage2",
    "MapImage3",
    "three_qubit_map",
    "two_qubit_map",
    "two_qubit_map_swapped",
    "vanishing_pattern",
    "AMPLITUDE_RELABELINGS",
    "Permutation",
    "all_permutations",
    "permute_state",
    "permuted_three_qubit_map",
    "k_invariant",
    "meyer_wallach",
    "meyer_wallach_permutation_average",
    "scott_q",
    "single_qubit_linear_entropies",
]
