"""Bundled weight sets.

W1 is the family {1, 2, ..., N}; W2 (20 weights) and W3 are fixed random integer
instances. W3 is kept exactly as published, which is 41 weights. Look them up by name
with `weight_set_from_name`.
"""

from __future__ import annotations

from typing import Callable, Dict

from ampamp.domain.cost.weight_set import WeightSet
from ampamp.errors import InputError


def w1(n_qubits: int) -> WeightSet:
    """Return W1 = {1, 2, ..., N}."""
    # Check: need at least one qubit
    if n_qubits < 1:
        raise InputError(f"Cannot call `w1` because $n_qubits ({n_qubits}) is not >= 1")
    return WeightSet(range(1, n_qubits + 1), name=f"W1_{n_qubits}")


W2 = WeightSet([-44, -35, -33, -32, -23, -20, -11, -11, -10, -4, 2, 6, 9, 11, 11, 17, 21, 34, 40, 43], name="W2")

W3 = WeightSet(
    [
        -731, -722, -676, -668, -663, -662, -564,
        -563, -555, -409, -209, -189, -135, -43,
        1, 3, 28, 48, 73, 127, 139, 156, 160, 286, 307,
        308, 427, 461, 490, 512, 548, 551, 568,
        583, 589, 642, 776, 917, 929, 948, 949,
    ],
    name="W3",
)

# Fixed sets by name; W1 is parameterized by N
_FIXED: Dict[str, WeightSet] = {
    "W2": W2,
    "W3": W3,
}

_FAMILIES: Dict[str, Callable[[int], WeightSet]] = {
    "W1": w1,
}


def weight_set_from_name(name: str, n_qubits: int | None = None) -> WeightSet:
    """Look up a bundled weight set.

    Args:
        name: "W1", "W2" or "W3" (case-insensitive).
        n_qubits: Required for "W1"; for fixed sets it must be omitted or equal their size.

    Raises:
        InputError: If the name is unknown or $n_qubits is missing / inconsistent.
    """
    key = name.strip().upper()
    if key in _FAMILIES:
        if n_qubits is None:
            raise InputError(f"Cannot call `weight_set_from_name` because '{key}' needs $n_qubits")
        return _FAMILIES[key](n_qubits)

    if key in _FIXED:
        ws = _FIXED[key]
        if n_qubits is not None and n_qubits != ws.n_qubits:
            raise InputError(f"Cannot call `weight_set_from_name` because '{key}' has {ws.n_qubits} weights, not $n_qubits={n_qubits}")
        return ws

    raise InputError(f"Weight set '{name}' not found. Available weight sets: {sorted([*_FAMILIES, *_FIXED])}")
