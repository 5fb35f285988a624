from fractions import Fraction

import numpy as np
import pytest

from ampamp.domain.cost.cost_function import CallableCostFunction, LinearCostFunction
from ampamp.domain.cost.weight_set import WeightSet
from ampamp.domain.cost.weight_sets import W2, W3, w1
from ampamp.errors import CapacityError, InputError
from ampamp.platform.spectrum.spectrum_builder import build_spectrum, build_spectrum_bruteforce, build_spectrum_dp, class_members

W1_5_COUNTS = [1, 1, 1, 2, 2, 3, 3, 3, 3, 3, 3, 2, 2, 1, 1, 1]


def test_w1_brute_force_counts():
    spectrum = build_spectrum_bruteforce(LinearCostFunction(w1(5)), 5)
    assert spectrum.values == tuple(range(16))
    assert list(spectrum.counts) == W1_5_COUNTS
    assert spectrum.c_bar == Fraction(15, 2)


def test_dp_matches_brute_force_for_w1():
    assert build_spectrum_dp(w1(5)) == build_spectrum_bruteforce(LinearCostFunction(w1(5)), 5)


def test_w1_forty_qubits():
    spectrum = build_spectrum(w1(40))
    assert spectrum.dimension == 821
    assert sum(spectrum.counts) == 2**40
    assert spectrum.is_symmetric()


def test_w2_extremes():
    spectrum = build_spectrum(W2)
    assert spectrum.c_bar == Fraction(-29, 2)
    assert spectrum.min_value == -223
    assert spectrum.max_value == 194
    assert spectrum.inverse_cost(-223) == 194
    assert sum(spectrum.counts) == 2**20


def test_w3_spectrum():
    spectrum = build_spectrum(W3)
    assert spectrum.n_qubits == 41
    assert sum(spectrum.counts) == 2**41
    assert spectrum.is_symmetric()


def test_rational_weights_are_exact():
    spectrum = build_spectrum(WeightSet([Fraction(1, 2), Fraction(1, 3)]))
    assert spectrum.values == (0, Fraction(1, 3), Fraction(1, 2), Fraction(5, 6))
    assert spectrum.counts == (1, 1, 1, 1)


def test_random_sets_agree_and_are_symmetric():
    rng = np.random.default_rng(7)
    for _ in range(100):
        n = int(rng.integers(1, 11))
        w = WeightSet([int(x) for x in rng.integers(-50, 51, size=n)])
        dp = build_spectrum_dp(w)
        assert dp == build_spectrum_bruteforce(LinearCostFunction(w), n)
        assert dp.is_symmetric()


def test_constant_cost_function():
    spectrum = build_spectrum_bruteforce(CallableCostFunction(lambda bits: 5, 3), 3)
    assert spectrum.values == (5,)
    assert spectrum.counts == (8,)


def test_nonlinear_cost_function():
    spectrum = build_spectrum_bruteforce(CallableCostFunction(lambda bits: bits[0] * bits[1], 2), 2)
    assert spectrum.values == (0, 1)
    assert spectrum.counts == (3, 1)


def test_float_costs_are_merged(caplog):
    fn = CallableCostFunction(lambda bits: 0.1 * sum(bits) + (1e-13 if bits[0] else 0.0), 2)
    spectrum = build_spectrum_bruteforce(fn, 2)
    assert spectrum.counts == (1, 2, 1)
    assert "Merged float-valued costs" in caplog.text


def test_class_members():
    assert class_members(LinearCostFunction(w1(3)), 3) == ["110", "001"]


def test_capacity_and_size_checks():
    with pytest.raises(CapacityError):
        build_spectrum_bruteforce(LinearCostFunction(w1(25)), 25)
    with pytest.raises(InputError):
        build_spectrum_bruteforce(LinearCostFunction(w1(3)), 4)
    with pytest.raises(InputError):
        build_spectrum_dp([1, 2, 3])
