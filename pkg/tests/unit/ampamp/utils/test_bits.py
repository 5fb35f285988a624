import pytest

from ampamp.errors import InputError
from ampamp.utils.bits import (
    bits_from_index,
    bits_to_bitstring,
    bitstring_to_bits,
    bitstring_to_index,
    index_from_bits,
    index_to_bitstring,
    invert_bits,
)


def test_leftmost_character_is_least_significant_bit():
    """z_1 is the leftmost bitstring character and bit 0 of the basis index."""
    assert bits_from_index(1, 3) == (1, 0, 0)
    assert index_to_bitstring(1, 3) == "100"
    assert bitstring_to_index("001") == 4
    assert bitstring_to_index("111") == 7


def test_index_and_bits_are_inverse():
    for i in range(16):
        assert index_from_bits(bits_from_index(i, 4)) == i
    assert bits_to_bitstring(bitstring_to_bits("0110")) == "0110"


def test_invert_bits():
    assert invert_bits((1, 0, 1, 1)) == (0, 1, 0, 0)


def test_invalid_inputs_raise():
    with pytest.raises(InputError):
        bits_from_index(8, 3)
    with pytest.raises(InputError):
        bitstring_to_bits("012")
    with pytest.raises(InputError):
        bitstring_to_bits("")
    with pytest.raises(InputError):
        index_from_bits((0, 2))
