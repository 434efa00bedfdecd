"""
Tests for maps/ - Hopf maps, permutations and invariants
"""

import numpy as np
import pytest

from data import (
    make_basis,
    make_bell,
    make_epr_pair_product,
    make_ghz,
    make_product,
    make_random_pure,
    make_w,
)
from maps import (
    AMPLITUDE_RELABELINGS,
    Permutation,
    all_permutations,
    k_invariant,
    meyer_wallach,
    meyer_wallach_permutation_average,
    permute_state,
    permuted_three_qubit_map,
    scott_q,
    three_qubit_map,
    two_qubit_map,
    two_qubit_map_swapped,
    vanishing_pattern,
)
from numerics import StateVector, partial_trace, purity, tensor
from utils.errors import ParameterError


def _linear_entropy(psi, qubit):
    return 2.0 * (1.0 - purity(partial_trace(psi, [qubit])))


def _middle_qubit_product(single, pair):
    """|single> on qubit 2 and |pair> on qubits 1 and 3."""
    amps = np.einsum("ac,b->abc", pair.amplitudes.reshape(2, 2), single.amplitudes)
    return StateVector.normalized(amps.reshape(-1))


class TestTwoQubitMap:
    """Two-qubit Hopf map slots."""

    def test_bell_state(self):
        """Test a Bell state maps to the concurrence pole with K = 1."""
        image = two_qubit_map(make_bell(0))
        assert abs(image.c_conc) == pytest.approx(1.0)
        assert abs(image.c_off) == pytest.approx(0.0, abs=1e-15)
        assert image.z == pytest.approx(0.0, abs=1e-15)
        assert k_invariant(image) == pytest.approx(1.0)

    def test_product_state(self):
        """Test |00> maps to the north pole with K = 0."""
        image = two_qubit_map(make_basis("00"))
        assert image.z == 1.0
        assert k_invariant(image) == 0.0

    def test_image_on_unit_sphere(self):
        """Test random states map onto the unit sphere."""
        for seed in range(20):
            assert two_qubit_map(make_random_pure(2, seed)).norm_squared == pytest.approx(1.0, abs=1e-12)

    def test_swapped_map_carries_qubit_two(self):
        """Test the swapped map reads qubit 2's populations."""
        psi = make_product([(1, 0), (1, 1)])
        assert two_qubit_map(psi).z == pytest.approx(1.0)
        assert two_qubit_map_swapped(psi).z == pytest.approx(0.0, abs=1e-15)

    def test_both_maps_share_the_concurrence_slot(self):
        """Test |c_conc| does not depend on which qubit the map carries."""
        for seed in range(200):
            psi = make_random_pure(2, seed)
            assert abs(two_qubit_map_swapped(psi).c_conc) == pytest.approx(abs(two_qubit_map(psi).c_conc), abs=1e-12)

    def test_wrong_size(self):
        """Test the two-qubit map rejects three qubits."""
        with pytest.raises(ParameterError):
            two_qubit_map(make_ghz(3))


class TestThreeQubitMap:
    """Three-qubit map coefficients and K."""

    def test_ghz_image(self):
        """Test GHZ3 maps to C4 = 1/2 with K = 1."""
        image = three_qubit_map(make_ghz(3))
        assert image.c4 == pytest.approx(0.5)
        assert abs(image.c1) + abs(image.c2) + abs(image.c3) == pytest.approx(0.0, abs=1e-15)
        assert k_invariant(image) == pytest.approx(1.0)

    def test_k_matches_purity_of_qubit_one(self):
        """Test K equals the linear entropy of qubit 1 on random states."""
        for seed in range(1000):
            psi = make_random_pure(3, seed)
            image = three_qubit_map(psi)
            assert abs(k_invariant(image) - _linear_entropy(psi, 1)) <= 1e-10
            assert image.norm_squared == pytest.approx(1.0, abs=1e-10)

    def test_z_is_population_difference_of_qubit_one(self):
        """Test z equals rho_1(00) - rho_1(11) of the reduced state."""
        for seed in range(200):
            psi = make_random_pure(3, seed)
            rho_1 = partial_trace(psi, [1]).matrix
            assert three_qubit_map(psi).z == pytest.approx((rho_1[0, 0] - rho_1[1, 1]).real, abs=1e-12)

    def test_factorized_first_qubit_vanishes(self):
        """Test |1> x Bell gives C2 = C3 = C4 = 0."""
        psi = tensor(make_basis("1"), make_bell(2))
        assert vanishing_pattern(three_qubit_map(psi)) == (True, True, True)

    @pytest.mark.parametrize("seed", range(10))
    def test_random_factorizations_fix_the_vanishing_pattern(self, seed):
        """Test 1x23, 12x3 and 2x13 products with random factors give their own C2, C3, C4 zeros."""
        one, pair = make_random_pure(1, seed), make_random_pure(2, seed + 1000)
        assert vanishing_pattern(three_qubit_map(tensor(one, pair))) == (True, True, True)
        assert vanishing_pattern(three_qubit_map(tensor(pair, one))) == (True, False, False)
        middle = _middle_qubit_product(one, pair)
        assert vanishing_pattern(three_qubit_map(middle)) == (False, True, False)

    @pytest.mark.parametrize("seed", range(10))
    def test_relabeling_132_on_middle_qubit_product(self, seed):
        """Test (132) moves the factorized qubit 2 of a 2x13 product into the 12x3 pattern."""
        middle = _middle_qubit_product(make_random_pure(1, seed), make_random_pure(2, seed + 1000))
        image = permuted_three_qubit_map(middle, Permutation.from_label("(132)"))
        assert vanishing_pattern(image) == (True, False, False)

    def test_bell_on_first_pair(self):
        """Test Bell x |0> puts all weight in C3."""
        psi = tensor(make_bell(0), make_basis("0"))
        image = three_qubit_map(psi)
        assert abs(2 * image.c3) ** 2 == pytest.approx(1.0)


class TestPermutations:
    """Qubit relabeling."""

    def test_label_round_trip(self):
        """Test a permutation label parses and prints back."""
        perm = Permutation.from_label("(312)")
        assert perm.image == (3, 1, 2)
        assert perm.label == "(312)"

    def test_not_a_bijection(self):
        """Test a repeated image is rejected."""
        with pytest.raises(ParameterError):
            Permutation((1, 1, 2))

    def test_inverse_and_compose(self):
        """Test every element composed with its inverse is the identity."""
        for perm in all_permutations(3):
            assert perm.compose(perm.inverse()) == Permutation.identity(3)

    def test_distinguished_qubit(self):
        """Test which qubit each relabeling carries into slot 1."""
        assert Permutation.from_label("213").distinguished_qubit == 2
        assert Permutation.from_label("231").distinguished_qubit == 3
        assert Permutation.from_label("312").distinguished_qubit == 2

    def test_lexicographic_order(self):
        """Test S_3 is listed lexicographically and matches the relabeling table."""
        labels = [p.label for p in all_permutations(3)]
        assert labels == ["(123)", "(132)", "(213)", "(231)", "(312)", "(321)"]
        assert set(labels) == set(AMPLITUDE_RELABELINGS)

    def test_permute_state_moves_bits(self):
        """Test (213) moves a bit from qubit 1 to qubit 2."""
        psi = make_basis("100")
        assert permute_state(psi, Permutation.from_label("213")).allclose(make_basis("010"))

    def test_relabel_path_matches_permute_path(self):
        """Test the symbol-exchange path agrees with permuting the vector."""
        for seed in range(100):
            psi = make_random_pure(3, seed)
            for perm in all_permutations(3):
                explicit = permuted_three_qubit_map(psi, perm, method="relabel")
                permuted = permuted_three_qubit_map(psi, perm, method="permute")
                assert explicit.allclose(permuted, atol=1e-12)
                assert abs(k_invariant(explicit) - _linear_entropy(psi, perm.distinguished_qubit)) <= 1e-10

    def test_permuted_map_needs_three_qubits(self):
        """Test a four-qubit permutation is rejected."""
        with pytest.raises(ParameterError, match="S_3"):
            permuted_three_qubit_map(make_ghz(3), Permutation.identity(4))


class TestMeyerWallachAndScott:
    """Linear-entropy measures."""

    def test_w3(self):
        """Test Meyer-Wallach of W3 is 8/9."""
        assert meyer_wallach(make_w(3)) == pytest.approx(8 / 9, abs=1e-12)

    def test_epr_product(self):
        """Test Meyer-Wallach of EPR x EPR is 1."""
        assert meyer_wallach(make_epr_pair_product()) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_permutation_average_matches_purity_average(self, n):
        """Test the permutation average equals the purity form."""
        for seed in range(10):
            psi = make_random_pure(n, seed)
            assert meyer_wallach_permutation_average(psi) == pytest.approx(meyer_wallach(psi), abs=1e-12)

    def test_permutation_average_size_limit(self):
        """Test the permutation average stops at four qubits."""
        with pytest.raises(ParameterError):
            meyer_wallach_permutation_average(make_ghz(5))

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_scott_q1_ghz(self, n):
        """Test Q_1 of GHZ is 1 for every size."""
        assert scott_q(make_ghz(n), 1) == pytest.approx(1.0, abs=1e-12)

    def test_scott_q2_ghz4(self):
        """Test Q_2 of GHZ4 is 2/3."""
        assert scott_q(make_ghz(4), 2) == pytest.approx(2 / 3, abs=1e-12)

    def test_scott_q1_is_meyer_wallach(self):
        """Test Q_1 equals Meyer-Wallach."""
        psi = make_random_pure(5, seed=21)
        assert scott_q(psi, 1) == pytest.approx(meyer_wallach(psi), abs=1e-12)

    def test_scott_m_range(self):
        """Test m above N/2 is rejected."""
        with pytest.raises(ParameterError, match="m must lie"):
            scott_q(make_ghz(4), 3)
