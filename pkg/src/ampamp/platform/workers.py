"""Order-preserving parallel map for independent grid points."""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

from ampamp.errors import InputError

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

JOBS_ENV_VAR = "AMPAMP_JOBS"


def default_jobs() -> int:
    """Worker count from $AMPAMP_JOBS, 1 when unset."""
    raw = os.environ.get(JOBS_ENV_VAR)
    if raw is None or not raw.strip():
        return 1
    try:
        jobs = int(raw)
    except ValueError:
        raise InputError(f"Environment variable {JOBS_ENV_VAR} ('{raw}') is not an integer") from None
    if jobs < 1:
        raise InputError(f"Environment variable {JOBS_ENV_VAR} ({jobs}) is not >= 1")
    return jobs


def map_ordered(fn: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> list[R]:
    """Apply $fn to every item and return results in input order.

    Runs in-process for $jobs == 1, otherwise on a process pool of $jobs workers. $fn and the
    items must be picklable in the latter case.
    """
    # Check: at least one worker
    if jobs < 1:
        raise InputError(f"Cannot call `map_ordered` because $jobs ({jobs}) is not >= 1")

    work = list(items)
    if jobs == 1 or len(work) <= 1:
        return [fn(item) for item in work]

    logger.debug(f"Dispatching {len(work)} task(s) to {jobs} worker process(es)")
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, work))
