"""
Tests for data/states.py and data/datasets.py
"""

import numpy as np
import pytest

from data import (
    check_family_values,
    load_family,
    make_basis,
    make_bell,
    make_epr_pair_product,
    make_ghz,
    make_mems_purification,
    make_product,
    make_random_mixed,
    make_random_pure,
    make_random_product_mixed,
    make_w,
    make_werner,
    parse_range,
)
from numerics import partial_trace, spectrum
from utils.errors import ParameterError


class TestNamedStates:
    """Benchmark state constructors."""

    def test_ghz_amplitudes(self):
        """Test GHZ3 has weight on |000> and |111> only."""
        amps = make_ghz(3).amplitudes
        assert amps[0] == pytest.approx(1 / np.sqrt(2))
        assert amps[7] == pytest.approx(1 / np.sqrt(2))
        assert np.count_nonzero(amps) == 2

    def test_w_single_excitations(self):
        """Test W3 is spread over the single-excitation states."""
        amps = make_w(3).amplitudes
        assert set(np.flatnonzero(amps)) == {1, 2, 4}
        assert np.allclose(amps[[1, 2, 4]], 1 / np.sqrt(3))

    def test_too_small_registers_rejected(self):
        """Test GHZ and W need at least two qubits."""
        with pytest.raises(ParameterError):
            make_ghz(1)
        with pytest.raises(ParameterError):
            make_w(1)

    def test_oversized_registers_rejected_before_allocation(self):
        """Test registers above twelve qubits raise instead of allocating 2**n amplitudes."""
        with pytest.raises(ParameterError, match="2..12 qubits, got 40"):
            make_ghz(40)
        with pytest.raises(ParameterError, match="2..12 qubits, got 13"):
            make_w(13)
        with pytest.raises(ParameterError, match="1..12 qubits, got 30"):
            make_basis("0" * 30)
        with pytest.raises(ParameterError):
            make_random_mixed(13, rank=1, seed=0)

    def test_singlet_is_bell_three(self):
        """Test bell:3 is the singlet."""
        assert np.allclose(make_bell(3).amplitudes, np.array([0, 1, -1, 0]) / np.sqrt(2))

    def test_mems_endpoint_is_epr_product(self):
        """Test the MEMS purification at x = 1 is EPR x EPR."""
        assert make_mems_purification(1.0).allclose(make_epr_pair_product(), atol=1e-15)

    def test_mems_zero_is_basis_state(self):
        """Test the MEMS purification at x = 0 is |0101>."""
        assert make_mems_purification(0.0).allclose(make_basis("0101"))

    def test_mems_out_of_range(self):
        """Test x outside [0, 1] is rejected."""
        with pytest.raises(ParameterError, match=r"\[0, 1\]"):
            make_mems_purification(1.5)

    def test_product_normalizes_factors(self):
        """Test product factors are normalized before the product."""
        psi = make_product([(1, 1), (1, 0)])
        assert np.allclose(psi.amplitudes, [1 / np.sqrt(2), 0, 1 / np.sqrt(2), 0])

    def test_werner_spectrum(self):
        """Test the Werner p = 0.8 spectrum."""
        values = spectrum(make_werner(0.8))
        assert np.allclose(values, [0.85, 0.05, 0.05, 0.05], atol=1e-12)


class TestRandomStates:
    """Seeded random states."""

    def test_same_seed_same_state(self):
        """Test a seed reproduces its state exactly."""
        assert make_random_pure(4, seed=99).allclose(make_random_pure(4, seed=99), atol=0)

    def test_different_seed_different_state(self):
        """Test different seeds give different states."""
        assert not make_random_pure(4, seed=1).allclose(make_random_pure(4, seed=2))

    def test_size_limit(self):
        """Test random states stop at twelve qubits."""
        with pytest.raises(ParameterError):
            make_random_pure(13, seed=0)

    def test_random_pure_states_are_normalized(self):
        """Test 1000 seeded random states all have unit norm."""
        for seed in range(1000):
            psi = make_random_pure(1 + seed % 8, seed)
            assert np.linalg.norm(psi.amplitudes) == pytest.approx(1.0, abs=1e-12)

    def test_random_mixed_rank(self):
        """Test a rank-2 random mixed state has two nonzero eigenvalues."""
        values = spectrum(make_random_mixed(2, rank=2, seed=4))
        assert np.sum(values > 1e-10) == 2

    def test_random_product_mixed_factorizes(self):
        """Test the random mixed product equals the product of its marginals."""
        rho = make_random_product_mixed(seed=8)
        rho_a = partial_trace(rho, [1]).matrix
        rho_b = partial_trace(rho, [2]).matrix
        assert np.allclose(np.kron(rho_a, rho_b), rho.matrix, atol=1e-12)


class TestFamilies:
    """Sweep families and ranges."""

    def test_inclusive_range(self):
        """Test 0:1:0.05 includes both endpoints."""
        values = parse_range("0:1:0.05")
        assert len(values) == 21
        assert values[0] == 0.0
        assert values[-1] == 1.0

    def test_bad_range(self):
        """Test reversed and incomplete ranges raise ParameterError."""
        with pytest.raises(ParameterError):
            parse_range("1:0:0.1")
        with pytest.raises(ParameterError):
            parse_range("0:1")

    def test_load_family(self):
        """Test a GHZ family yields one state per parameter."""
        points = load_family("ghz", [3.0, 4.0])
        assert [x for x, _ in points] == [3.0, 4.0]
        assert points[1][1].n_qubits == 4

    def test_unknown_family(self):
        """Test an unknown family name raises ValueError."""
        with pytest.raises(ValueError, match="Unknown family"):
            load_family("cluster", [1.0])

    def test_integer_family_rejects_fraction(self):
        """Test integer families reject fractional parameters."""
        with pytest.raises(ParameterError):
            load_family("w", [2.5])

    @pytest.mark.parametrize(
        "family,values",
        [("w", [13.0]), ("ghz", [3.0, 40.0]), ("ghz", [1.0]), ("mems", [0.5, 1.5])],
    )
    def test_out_of_range_parameters_fail_before_any_state_is_built(self, family, values):
        """Test the whole range is checked up front, so oversized members never allocate."""
        with pytest.raises(ParameterError, match="takes parameters in"):
            load_family(family, values)
        with pytest.raises(ParameterError, match="takes parameters in"):
            check_family_values(family, values)
