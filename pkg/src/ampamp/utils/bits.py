"""Bit-ordering convention shared by cost functions, circuits and record files.

Bit z_1 pairs with weight W_1, is qubit q_1 (circuit qubit index 0), is the least
significant bit of the basis-state index and is the LEFTMOST character of a bitstring.
So the basis index of bitstring "100" is 1 and of "001" is 4.
"""

from __future__ import annotations

from typing import Sequence

from ampamp.errors import InputError


def bits_from_index(index: int, n_bits: int) -> tuple[int, ...]:
    """Return (z_1, ..., z_N) for basis index $index."""
    # Check: index must address one of the 2^N basis states
    if not 0 <= index < (1 << n_bits):
        raise InputError(f"Cannot call `bits_from_index` because $index ({index}) is outside [0, 2^{n_bits})")
    return tuple((index >> q) & 1 for q in range(n_bits))


def index_from_bits(bits: Sequence[int]) -> int:
    """Inverse of `bits_from_index`."""
    index = 0
    for q, z in enumerate(bits):
        if z not in (0, 1):
            raise InputError(f"Cannot call `index_from_bits` because bit {q} ('{z}') is not 0 or 1")
        index |= z << q
    return index


def bitstring_to_bits(text: str) -> tuple[int, ...]:
    """Parse a bitstring whose leftmost character is z_1."""
    if not text or any(ch not in "01" for ch in text):
        raise InputError(f"Cannot call `bitstring_to_bits` because $text ('{text}') is not a non-empty string of 0/1")
    return tuple(int(ch) for ch in text)


def bits_to_bitstring(bits: Sequence[int]) -> str:
    return "".join(str(z) for z in bits)


def index_to_bitstring(index: int, n_bits: int) -> str:
    return bits_to_bitstring(bits_from_index(index, n_bits))


def bitstring_to_index(text: str) -> int:
    return index_from_bits(bitstring_to_bits(text))


def invert_bits(bits: Sequence[int]) -> tuple[int, ...]:
    """Bitwise inverse ¬Z."""
    return tuple(1 - z for z in bits)
