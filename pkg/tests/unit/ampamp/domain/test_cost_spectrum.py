import math
from fractions import Fraction

import numpy as np
import pytest

from ampamp.domain.cost.cost_spectrum import CostSpectrum, inverse_cost, sigma_scaled
from ampamp.domain.cost.phase_scale import PhaseScale
from ampamp.errors import DomainError, InputError

# W1 with N=2: subset sums of {1, 2}
W1_2 = CostSpectrum([0, 1, 2, 3], [1, 1, 1, 1], 2)


def test_spectrum_properties():
    assert W1_2.dimension == 4
    assert W1_2.c_bar == Fraction(3, 2)
    assert W1_2.min_value == 0
    assert W1_2.max_value == 3
    assert W1_2.index_of(2) == 2
    assert W1_2.count_of(7) == 0
    assert W1_2.contains("3")
    np.testing.assert_allclose(W1_2.probability_weights(), [0.25] * 4)


def test_from_mapping_sorts_values():
    s = CostSpectrum.from_mapping({3: 1, 0: 1, 1: 2}, 2)
    assert s.values == (0, 1, 3)
    assert s.counts == (1, 2, 1)


def test_grover_spectrum():
    s = CostSpectrum.grover(3, 2)
    assert s.values == (0, 1)
    assert s.counts == (6, 2)
    with pytest.raises(InputError):
        CostSpectrum.grover(3, 8)


@pytest.mark.parametrize(
    "values, counts, n_qubits",
    [
        ([0, 1], [1, 1, 2], 2),  # length mismatch
        ([], [], 2),  # no classes
        ([1, 0], [2, 2], 2),  # not increasing
        ([0, 1], [4, 0], 2),  # zero count
        ([0, 1], [1, 2], 2),  # counts do not sum to 2^N
    ],
)
def test_invalid_spectra_are_rejected(values, counts, n_qubits):
    with pytest.raises(InputError):
        CostSpectrum(values, counts, n_qubits)


def test_constant_cost_has_single_class():
    s = CostSpectrum([7], [8], 3)
    assert s.dimension == 1
    assert s.c_bar == 7
    assert s.inverse_cost(7) == 7


def test_index_of_unknown_value_raises_domain_error():
    with pytest.raises(DomainError):
        W1_2.index_of(Fraction(1, 2))


def test_inverse_cost():
    # W1 with N=10 has C̄ = 27.5
    w1_10_like = CostSpectrum([0, 55], [512, 512], 10)
    assert inverse_cost(w1_10_like, 2) == 53
    assert inverse_cost(w1_10_like, Fraction(55, 2)) == Fraction(55, 2)


def test_sigma_scaled():
    assert sigma_scaled(W1_2, 0.0) == 0.0
    assert math.isclose(sigma_scaled(W1_2, 1.0), math.sqrt(1.25))
    assert math.isclose(W1_2.sigma_scaled(2.0), 2 * W1_2.sigma_scaled(1.0))
    assert math.isclose(W1_2.sigma_scaled(-1.0), math.sqrt(1.25))
    assert math.isclose(W1_2.sigma_scaled(PhaseScale.from_pi_multiple(1)), math.pi * math.sqrt(1.25))


def test_symmetry():
    assert W1_2.is_symmetric()
    assert not CostSpectrum([0, 1, 3], [2, 1, 1], 2).is_symmetric()
