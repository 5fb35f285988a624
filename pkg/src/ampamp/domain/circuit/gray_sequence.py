from __future__ import annotations

from functools import lru_cache

from ampamp.errors import InputError


class GraySequence:
    """Reflected binary Gray code G_n: G_1 = (0, 1), G_{n+1} = (0·G_n, 1·reverse(G_n)).

    Attributes:
        n_bits (int): Code length n.
        codes (tuple[str, ...]): The 2^n codes, starting from all zeros.
    """

    __slots__ = ("_n_bits", "_codes")

    def __init__(self, n_bits: int, codes: tuple[str, ...]):
        self._n_bits = n_bits
        self._codes = codes

    @property
    def n_bits(self) -> int:
        return self._n_bits

    @property
    def codes(self) -> tuple[str, ...]:
        return self._codes

    def changed_bit(self, position: int) -> int:
        """Index (from the left) of the bit that differs between codes $position - 1 and $position."""
        previous, current = self._codes[position - 1], self._codes[position]
        return next(i for i, (a, b) in enumerate(zip(previous, current)) if a != b)

    def __len__(self) -> int:
        return len(self._codes)

    def __iter__(self):
        return iter(self._codes)

    def __getitem__(self, position: int) -> str:
        return self._codes[position]

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(n_bits={self._n_bits}, codes={list(self._codes)})"


def gray_sequence(n: int) -> GraySequence:
    """Build G_$n recursively.

    Raises:
        InputError: If $n < 1.
    """
    # Check: shortest code has one bit
    if n < 1:
        raise InputError(f"Cannot call `gray_sequence` because $n ({n}) is not >= 1")
    return GraySequence(n, _codes(n))


@lru_cache(maxsize=None)
def _codes(n: int) -> tuple[str, ...]:
    if n == 1:
        return ("0", "1")
    previous = _codes(n - 1)
    return tuple("0" + c for c in previous) + tuple("1" + c for c in reversed(previous))
