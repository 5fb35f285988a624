"""Synthetic measurement records drawn from the theory mixed with the uniform distribution."""

from __future__ import annotations

import logging

import numpy as np

from ampamp.domain.fidelity.experiment_spec import ExperimentSpec
from ampamp.domain.fidelity.measurement_record import MeasurementRecord
from ampamp.errors import InputError
from ampamp.platform.fidelity.theory import theory_basis_probabilities
from ampamp.utils.bits import index_to_bitstring

logger = logging.getLogger(__name__)

DEFAULT_SHOTS = 10_000


def synthesize_records(spec: ExperimentSpec, shots: int = DEFAULT_SHOTS, noise_mix: float = 0.0, seed: int = 0) -> list[MeasurementRecord]:
    """One multinomial sample of (1 - λ)·theory + λ·uniform per grid point.

    Args:
        spec: Experiment and grid.
        shots: Samples per record.
        noise_mix: λ in [0, 1].
        seed: Seed of the `numpy.random.default_rng` generator; equal seeds give equal records.
    """
    # Check: sampling parameters
    if shots < 1:
        raise InputError(f"Cannot call `synthesize_records` because $shots ({shots}) is not >= 1")
    if not 0.0 <= noise_mix <= 1.0:
        raise InputError(f"Cannot call `synthesize_records` because $noise_mix ({noise_mix}) is not in [0, 1]")

    rng = np.random.default_rng(seed)
    n = spec.n_qubits
    uniform = 1.0 / (1 << n)
    records = []
    for parameter in spec.grid:
        probs = (1.0 - noise_mix) * theory_basis_probabilities(spec, parameter) + noise_mix * uniform
        probs = np.clip(probs, 0.0, None)
        probs /= probs.sum()
        counts = rng.multinomial(shots, probs)
        records.append(MeasurementRecord(float(parameter), shots, {index_to_bitstring(i, n): int(c) for i, c in enumerate(counts) if c}))

    logger.debug(f"Synthesized {len(records)} record(s) for {spec} (shots={shots}, λ={noise_mix}, seed={seed})")
    return records
