"""
Tests for evaluators/ - pair probes and the pair table
"""

import numpy as np
import pytest

from data import (
    make_basis,
    make_bell,
    make_epr_pair_product,
    make_ghz,
    make_random_mixed,
    make_random_product_mixed,
    make_random_pure,
    make_w,
    make_werner,
)
from evaluators import (
    EVALUATORS,
    MutualInfoEvaluator,
    ProbeKind,
    QuasiConcurrenceEvaluator,
    entanglement_of_formation,
    fr_probe,
    get_evaluator,
    pair_probe_matrix,
    quasi_concurrence,
    spin_flip,
    sqrt_spectrum,
    wootters_concurrence,
)
from maps import Permutation, all_permutations, permute_state, two_qubit_map
from numerics import DensityMatrix, partial_trace
from utils.errors import ParameterError, QubitIndexError

W3_FR = 0.5 * (np.log2(3) - 2 / 3)


class TestSpinFlip:
    """Spin-flip transform."""

    def test_ghz_pair_is_invariant(self):
        """Test a GHZ pair reduction is its own spin flip."""
        rho = partial_trace(make_ghz(3), [1, 2])
        assert np.allclose(spin_flip(rho), rho.matrix, atol=1e-15)

    def test_singlet_is_invariant(self):
        """Test the singlet is invariant under the spin flip."""
        rho = make_bell(3).projector()
        assert np.allclose(spin_flip(rho), rho.matrix, atol=1e-15)

    def test_involution(self):
        """Test applying the spin flip twice gives back the input."""
        rho = make_random_mixed(2, rank=3, seed=2)
        once = DensityMatrix(spin_flip(rho))
        assert np.allclose(spin_flip(once), rho.matrix, atol=1e-12)

    def test_wrong_size(self):
        """Test the spin flip rejects a three-qubit matrix."""
        with pytest.raises(ParameterError):
            spin_flip(make_ghz(3).projector())


class TestSqrtSpectrum:
    """Square-root eigenvalues of rho rho~."""

    def test_ghz_pair(self):
        """Test the GHZ pair spectrum is (1/2, 1/2, 0, 0)."""
        lambdas = sqrt_spectrum(partial_trace(make_ghz(3), [1, 2])).lambdas
        assert np.allclose(lambdas, [0.5, 0.5, 0, 0], atol=1e-12)

    def test_pure_product_is_zero(self):
        """Test a pure product state has an all-zero spectrum."""
        assert np.allclose(sqrt_spectrum(make_basis("01").projector()).lambdas, 0, atol=1e-12)

    def test_mixed_product_is_flat(self):
        """Test a mixed product has four equal eigenvalues sqrt(det A det B)."""
        rho = make_random_product_mixed(seed=3)
        det_a = np.linalg.det(partial_trace(rho, [1]).matrix).real
        det_b = np.linalg.det(partial_trace(rho, [2]).matrix).real
        assert np.allclose(sqrt_spectrum(rho).lambdas, np.sqrt(det_a * det_b), atol=1e-10)


class TestPairProbes:
    """Quasi-concurrence, concurrence and Fr."""

    def test_qc_ghz_pair(self):
        """Test quasi-concurrence of a GHZ4 pair is 1."""
        assert quasi_concurrence(partial_trace(make_ghz(4), [2, 3])) == pytest.approx(1.0, abs=1e-12)

    def test_pure_states_agree_with_concurrence(self):
        """Test qc and Wootters C both equal |c_conc| on random pure states."""
        for seed in range(1000):
            psi = make_random_pure(2, seed)
            rho = psi.projector()
            expected = abs(two_qubit_map(psi).c_conc)
            assert abs(quasi_concurrence(rho) - expected) <= 1e-10
            assert abs(wootters_concurrence(rho) - expected) <= 1e-10

    def test_factorizable_states_vanish(self):
        """Test both probes vanish on random mixed products."""
        for seed in range(100):
            rho = make_random_product_mixed(seed)
            assert quasi_concurrence(rho) <= 1e-9
            assert abs(fr_probe(rho)) <= 1e-9

    @pytest.mark.parametrize("p,expected", [(0.2, 0.0), (0.5, 0.25), (0.8, 0.7)])
    def test_werner_concurrence(self, p, expected):
        """Test Wootters C on the Werner family."""
        assert wootters_concurrence(make_werner(p)) == pytest.approx(expected, abs=1e-12)

    def test_bell_and_maximally_mixed(self):
        """Test Wootters C is 1 on a Bell state and 0 on I/4."""
        assert wootters_concurrence(make_bell(1).projector()) == pytest.approx(1.0)
        assert wootters_concurrence(DensityMatrix(np.eye(4) / 4)) == 0.0

    def test_entanglement_of_formation(self):
        """Test EoF is 1 on a Bell state and 0 below the Werner threshold."""
        assert entanglement_of_formation(make_bell(0).projector()) == pytest.approx(1.0, abs=1e-12)
        assert entanglement_of_formation(make_werner(0.2)) == 0.0

    def test_fr_ghz_pair(self):
        """Test Fr is 1/2 on every GHZ pair."""
        for n in (3, 4, 5):
            assert fr_probe(partial_trace(make_ghz(n), [1, n])) == pytest.approx(0.5, abs=1e-12)

    def test_fr_w3_pair(self):
        """Test Fr on a W3 pair matches the closed form."""
        assert fr_probe(partial_trace(make_w(3), [1, 2])) == pytest.approx(W3_FR, abs=1e-6)

    def test_fr_product_pair(self):
        """Test Fr vanishes on a basis state pair."""
        assert fr_probe(partial_trace(make_basis("010"), [1, 3])) == pytest.approx(0.0, abs=1e-12)

    def test_qc_observed_range(self):
        """Test qc on random three-qubit pairs is non-negative and reaches above 1/2."""
        largest = 0.0
        for seed in range(2000):
            rho = partial_trace(make_random_pure(3, seed), [1, 2])
            value = quasi_concurrence(rho)
            assert value >= 0.0
            largest = max(largest, value)
        assert largest > 0.5


class TestRegistry:
    """Probe lookup."""

    def test_lookup(self):
        """Test lookup by string and by enum."""
        assert isinstance(get_evaluator("qc"), QuasiConcurrenceEvaluator)
        assert isinstance(get_evaluator(ProbeKind.MUTUAL_INFO_FR), MutualInfoEvaluator)

    def test_unknown_probe(self):
        """Test an unknown probe name raises ParameterError."""
        with pytest.raises(ParameterError, match="Unknown probe"):
            get_evaluator("negativity")

    def test_registry_holds_only_qc_and_fr(self):
        """Test every registered evaluator is filed under its own kind."""
        assert set(EVALUATORS) == {ProbeKind.QUASI_CONCURRENCE, ProbeKind.MUTUAL_INFO_FR}
        for kind, evaluator in EVALUATORS.items():
            assert callable(evaluator.evaluate)
            assert evaluator.kind is kind


class TestPairProbeMatrix:
    """All-pairs tables."""

    def test_ghz4_fr(self):
        """Test the GHZ4 Fr table lists all six pairs at 1/2."""
        pm = pair_probe_matrix(make_ghz(4), ProbeKind.MUTUAL_INFO_FR)
        assert pm.pairs() == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
        assert np.allclose(pm.as_array(), 0.5, atol=1e-12)

    def test_epr_product_fr(self):
        """Test EPR x EPR has Fr = 1 on the two EPR pairs only."""
        pm = pair_probe_matrix(make_epr_pair_product(), "fr")
        expected = {(1, 2): 1.0, (3, 4): 1.0}
        for pair, value in pm.values.items():
            assert value == pytest.approx(expected.get(pair, 0.0), abs=1e-10)

    def test_w3_qc_is_symmetric(self):
        """Test the W3 qc table is flat at 2/3."""
        values = pair_probe_matrix(make_w(3), "qc").as_array()
        assert np.ptp(values) <= 1e-12
        assert values[0] == pytest.approx(2 / 3, abs=1e-10)

    def test_get_is_symmetric(self):
        """Test get() ignores pair order and rejects a diagonal pair."""
        pm = pair_probe_matrix(make_epr_pair_product(), "fr")
        assert pm.get(2, 1) == pm.get(1, 2)
        assert np.allclose(pm.as_matrix(), pm.as_matrix().T)
        with pytest.raises(QubitIndexError):
            pm.get(1, 1)

    def test_relabeling_invariance(self):
        """Test relabeling qubits relabels the table."""
        psi = make_random_pure(4, seed=17)
        original = pair_probe_matrix(psi, "qc")
        for perm in list(all_permutations(4))[::5]:
            relabeled = pair_probe_matrix(permute_state(psi, perm), "qc")
            for (a, b), value in original.values.items():
                assert relabeled.get(perm(a), perm(b)) == pytest.approx(value, abs=1e-10)

    def test_density_input(self):
        """Test a density matrix input is probed directly."""
        pm = pair_probe_matrix(make_werner(0.8), "qc")
        assert pm.values[(1, 2)] == pytest.approx(quasi_concurrence(make_werner(0.8)))

    def test_single_qubit_rejected(self):
        """Test a one-qubit state has no pairs."""
        with pytest.raises(ParameterError):
            pair_probe_matrix(make_basis("0"), "fr")
