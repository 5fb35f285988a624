from fractions import Fraction

import pytest

from ampamp.domain.cost.cost_function import CallableCostFunction, LinearCostFunction, evaluate_linear, mean_cost_from_inverse_pair
from ampamp.domain.cost.weight_set import WeightSet
from ampamp.domain.cost.weight_sets import W2, W3, w1, weight_set_from_name
from ampamp.errors import InputError


def test_w1_properties():
    w = w1(5)
    assert w.n_qubits == 5
    assert w.w_sum == 15
    assert w.n_prime == 15
    assert w.name == "W1_5"
    assert w.is_integer()


def test_integer_scaled_uses_common_denominator():
    w = WeightSet(["1/2", Fraction(1, 3), 2])
    assert w.integer_scaled() == ((3, 2, 12), 6)
    assert not w.is_integer()


def test_empty_weight_set_is_rejected():
    with pytest.raises(InputError):
        WeightSet([])


def test_non_numeric_weight_is_rejected():
    with pytest.raises(InputError):
        WeightSet([1, "two"])


def test_registry_lookup():
    assert weight_set_from_name("w2") is W2
    assert weight_set_from_name("W3") is W3
    assert weight_set_from_name("W1", 4) == w1(4)
    assert W2.n_qubits == 20
    assert W2.w_sum == -29
    assert W3.n_qubits == 41


@pytest.mark.parametrize(
    "name, n_qubits",
    [
        ("W1", None),  # W1 needs N
        ("W2", 19),  # inconsistent size
        ("W9", None),  # unknown
    ],
)
def test_registry_lookup_errors(name, n_qubits):
    with pytest.raises(InputError):
        weight_set_from_name(name, n_qubits)


@pytest.mark.parametrize(
    "weights, z, expected",
    [
        (w1(5), "00000", 0),
        (w1(5), "11111", 15),
        (W2, "11111111110000000000", -223),
        (w1(3), (0, 1, 1), 5),
    ],
)
def test_evaluate_linear(weights, z, expected):
    assert evaluate_linear(weights, z) == expected


def test_evaluate_linear_length_mismatch():
    with pytest.raises(InputError):
        evaluate_linear(w1(5), "0101")


@pytest.mark.parametrize(
    "weights, z, expected",
    [
        (w1(10), "0000000000", Fraction(55, 2)),
        (w1(10), "1010101010", Fraction(55, 2)),
        (W2, "01100111010100011101", Fraction(-29, 2)),
        (W2, "00000000000000000000", Fraction(-29, 2)),
    ],
)
def test_mean_cost_from_inverse_pair(weights, z, expected):
    assert mean_cost_from_inverse_pair(weights, z) == expected


def test_cost_function_wrappers():
    linear = LinearCostFunction(w1(3))
    assert linear.n_qubits == 3
    assert linear.evaluate_index(6) == 5  # "011"

    squared = CallableCostFunction(lambda bits: sum(bits) ** 2, 3)
    assert squared.evaluate((1, 1, 0)) == 4
    assert squared.evaluate_index(7) == 9
