"""Reference simulation over all 2^N explicit amplitudes.

Independent of the collective-state reduction; used to validate it for N <= 12.
"""

from __future__ import annotations

import logging
import math
from typing import Union

import numpy as np

from ampamp.domain.cost.cost_function import CostFunction
from ampamp.domain.cost.cost_spectrum import CostSpectrum
from ampamp.domain.cost.phase_scale import PhaseScale
from ampamp.errors import CapacityError, InputError
from ampamp.platform.spectrum.spectrum_builder import build_spectrum_bruteforce
from ampamp.utils.bits import bits_from_index
from ampamp.utils.math import to_fraction

logger = logging.getLogger(__name__)

STATEVECTOR_MAX_QUBITS = 12


def full_statevector_reference(
    costfn: CostFunction,
    n_qubits: int,
    ps: Union[PhaseScale, float],
    theta: float,
    k: int,
    spectrum: CostSpectrum | None = None,
) -> np.ndarray:
    """Run k iterations on the explicit 2^N statevector and aggregate by cost class.

    Args:
        costfn: Cost function C(Z).
        n_qubits: N (<= 12).
        ps: Phase scale of the oracle.
        theta: Diffusion angle.
        k: Number of iterations.
        spectrum: Class layout for the aggregation; built by brute force when omitted.

    Returns:
        Per-class probabilities aligned with $spectrum.values.

    Raises:
        CapacityError: If $n_qubits > 12.
    """
    if n_qubits > STATEVECTOR_MAX_QUBITS:
        raise CapacityError(f"Cannot call `full_statevector_reference` because $n_qubits ({n_qubits}) > {STATEVECTOR_MAX_QUBITS}")
    if k < 0:
        raise InputError(f"Cannot call `full_statevector_reference` because $k ({k}) is not >= 0")

    if spectrum is None:
        spectrum = build_spectrum_bruteforce(costfn, n_qubits)

    scale = PhaseScale.of(ps)
    costs = [costfn.evaluate(bits_from_index(i, n_qubits)) for i in range(1 << n_qubits)]
    class_of = np.array([_class_index(spectrum, c) for c in costs], dtype=np.intp)
    phasors = scale.phasors(costs)

    psi = np.full(1 << n_qubits, 1.0 / math.sqrt(float(1 << n_qubits)), dtype=np.complex128)
    shift_factor = 1.0 - np.exp(1j * theta)
    for _ in range(k):
        psi = psi * phasors
        psi = psi - shift_factor * psi.mean()

    probs = np.zeros(spectrum.dimension, dtype=np.float64)
    np.add.at(probs, class_of, np.abs(psi) ** 2)
    logger.debug(f"Statevector reference: N={n_qubits}, k={k}, D={spectrum.dimension}")
    return probs


def _class_index(spectrum: CostSpectrum, cost) -> int:
    if isinstance(cost, float):
        # Float costs were merged into the nearest class value
        values = np.array([float(v) for v in spectrum.values])
        return int(np.argmin(np.abs(values - cost)))
    return spectrum.index_of(to_fraction(cost))


