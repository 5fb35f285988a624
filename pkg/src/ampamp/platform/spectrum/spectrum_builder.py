"""Exact construction of cost spectra {(C_j, N_j)}.

Two independent paths:
- brute force over all 2^N bitstrings, for any cost function (N <= 24);
- subset-sum counting for linear cost functions, which reaches N = 40 in well under a second.
"""

from __future__ import annotations

import logging
from collections import Counter
from fractions import Fraction

import numpy as np

from ampamp.domain.cost.cost_function import CostFunction, LinearCostFunction
from ampamp.domain.cost.cost_spectrum import CostSpectrum
from ampamp.domain.cost.weight_set import WeightSet
from ampamp.errors import CapacityError, InputError
from ampamp.utils.bits import bits_from_index, index_to_bitstring
from ampamp.utils.math import to_fraction

logger = logging.getLogger(__name__)

BRUTE_FORCE_MAX_QUBITS = 24

# int64 counts hold up to 2^62 bitstrings
DP_MAX_QUBITS = 62

# Relative tolerance used to merge float-valued costs into one class
REAL_MERGE_TOLERANCE = 1e-9


def build_spectrum_bruteforce(costfn: CostFunction, n_qubits: int) -> CostSpectrum:
    """Enumerate all 2^N bitstrings and group equal cost values.

    Exact (Fraction / int) costs are grouped exactly. Float costs, accepted only through a
    generic cost function, are merged when they differ by at most 1e-9·max|C|.

    Args:
        costfn: Cost function to enumerate.
        n_qubits: N; must match $costfn.

    Raises:
        CapacityError: If $n_qubits > 24.
        InputError: If $n_qubits differs from the cost function's qubit count.
    """
    _check_brute_force_size(n_qubits, "build_spectrum_bruteforce")

    # Check: qubit count agrees with the cost function
    if costfn.n_qubits != n_qubits:
        raise InputError(f"Cannot call `build_spectrum_bruteforce` because $n_qubits ({n_qubits}) differs from the cost function's N ({costfn.n_qubits})")

    if isinstance(costfn, LinearCostFunction):
        scaled = costfn.evaluate_all_scaled()
        if scaled is not None:
            costs, denominator = scaled
            values, counts = np.unique(costs, return_counts=True)
            logger.debug(f"Brute-force spectrum over 2^{n_qubits} strings: D={len(values)}")
            return CostSpectrum([Fraction(int(v), denominator) for v in values], [int(c) for c in counts], n_qubits)

    evaluations = [costfn.evaluate(bits_from_index(i, n_qubits)) for i in range(1 << n_qubits)]
    if any(isinstance(e, float) for e in evaluations):
        spectrum = _merge_real_costs([float(e) for e in evaluations], n_qubits)
    else:
        tally = Counter(to_fraction(e) for e in evaluations)
        spectrum = CostSpectrum.from_mapping(tally, n_qubits)

    logger.debug(f"Brute-force spectrum over 2^{n_qubits} strings: D={spectrum.dimension}")
    return spectrum


def build_spectrum_dp(w: WeightSet) -> CostSpectrum:
    """Count subset sums of the (integer-scaled) weights by dynamic programming.

    The weights are multiplied by their common denominator first, so rational weights are
    handled exactly. The table spans [Σ negative weights, Σ positive weights].

    Raises:
        InputError: If $w is not a `WeightSet`.
        CapacityError: If N > 62 (counts would overflow int64).
    """
    # Check: weights must already be validated numbers
    if not isinstance(w, WeightSet):
        raise InputError(f"Cannot call `build_spectrum_dp` because $w is {type(w).__name__}, not a WeightSet")

    n = w.n_qubits
    if n > DP_MAX_QUBITS:
        raise CapacityError(f"Cannot call `build_spectrum_dp` because N ({n}) > {DP_MAX_QUBITS}; counts would overflow int64")

    scaled, denominator = w.integer_scaled()
    lo = sum(x for x in scaled if x < 0)
    hi = sum(x for x in scaled if x > 0)
    size = hi - lo + 1

    table = np.zeros(size, dtype=np.int64)
    table[-lo] = 1  # empty subset has sum 0
    for x in scaled:
        shifted = table.copy()
        if x > 0:
            shifted[x:] += table[: size - x]
        elif x < 0:
            shifted[: size + x] += table[-x:]
        else:
            shifted += table
        table = shifted

    nonzero = np.nonzero(table)[0]
    values = [Fraction(int(i) + lo, denominator) for i in nonzero]
    counts = [int(table[i]) for i in nonzero]
    logger.debug(f"DP spectrum for {w}: table size {size}, D={len(values)}")
    return CostSpectrum(values, counts, n)


def class_members(costfn: CostFunction, c) -> list[str]:
    """Return the bitstrings of every Z with C(Z) = $c, in increasing basis-index order.

    Membership is never stored in a spectrum; it is recomputed here by evaluating C(Z).

    Raises:
        CapacityError: If N > 24.
    """
    n = costfn.n_qubits
    _check_brute_force_size(n, "class_members")
    target = to_fraction(c)
    members = []
    for i in range(1 << n):
        value = costfn.evaluate(bits_from_index(i, n))
        if isinstance(value, float):
            if abs(value - float(target)) <= REAL_MERGE_TOLERANCE * max(1.0, abs(value)):
                members.append(index_to_bitstring(i, n))
        elif to_fraction(value) == target:
            members.append(index_to_bitstring(i, n))
    return members


# region Internal


def _check_brute_force_size(n_qubits: int, caller: str) -> None:
    if n_qubits > BRUTE_FORCE_MAX_QUBITS:
        raise CapacityError(f"Cannot call `{caller}` because $n_qubits ({n_qubits}) > {BRUTE_FORCE_MAX_QUBITS}; enumerating 2^N strings is not supported")
    if n_qubits < 1:
        raise InputError(f"Cannot call `{caller}` because $n_qubits ({n_qubits}) is not >= 1")


def _merge_real_costs(costs: list[float], n_qubits: int) -> CostSpectrum:
    ordered = sorted(costs)
    scale = max(abs(ordered[0]), abs(ordered[-1]))
    tolerance = REAL_MERGE_TOLERANCE * scale

    values: list[Fraction] = []
    counts: list[int] = []
    group_start = None
    for v in ordered:
        if group_start is not None and v - group_start <= tolerance:
            counts[-1] += 1
            continue
        group_start = v
        values.append(to_fraction(v))
        counts.append(1)

    logger.warning(f"Merged float-valued costs with tolerance {tolerance!r}; classes are approximate")
    return CostSpectrum(values, counts, n_qubits)


# endregion


def build_spectrum(w: WeightSet) -> CostSpectrum:
    """Spectrum of the linear cost function over $w (subset-sum counting, any N up to 62)."""
    return build_spectrum_dp(w)
