from __future__ import annotations

import argparse
import math
from dataclasses import dataclass, field
from pathlib import Path

from ampamp.errors import InputError
from ampamp.platform.workers import default_jobs

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

# Flags naming files that must exist before any work starts
_INPUT_FLAGS = ("weights", "spectrum", "records")


@dataclass(frozen=True)
class RunConfig:
    """Settings shared by every subcommand.

    Attributes:
        command: Subcommand name.
        out_dir: Directory receiving all output files.
        log_level: Root logging level.
        jobs: Worker processes for sweeps and scans.
        seed: Seed for sampling subcommands.
        pi_units: Whether angle inputs are given in multiples of π.
        inputs: Input files named on the command line.
    """

    command: str
    out_dir: Path = Path(".")
    log_level: str = "WARNING"
    jobs: int = 1
    seed: int = 0
    pi_units: bool = False
    inputs: tuple[Path, ...] = field(default_factory=tuple)

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> RunConfig:
        """Build from parsed flags; --jobs falls back to $AMPAMP_JOBS."""
        inputs = tuple(Path(getattr(args, flag)) for flag in _INPUT_FLAGS if getattr(args, flag, None))
        jobs = args.jobs if args.jobs is not None else default_jobs()
        return cls(
            command=args.command,
            out_dir=Path(args.out),
            log_level=args.log_level.upper(),
            jobs=jobs,
            seed=args.seed,
            pi_units=args.pi_units,
            inputs=inputs,
        )

    def validate(self) -> RunConfig:
        """Check every path before work starts.

        Raises:
            InputError: On a missing input file, an unusable output directory, an unknown log
                level or a worker count below 1.
        """
        if self.log_level not in LOG_LEVELS:
            raise InputError(f"Log level '{self.log_level}' not found. Available levels: {list(LOG_LEVELS)}")
        if self.jobs < 1:
            raise InputError(f"Cannot run `{self.command}` because --jobs ({self.jobs}) is not >= 1")
        for path in self.inputs:
            if not path.is_file():
                raise InputError(f"Cannot run `{self.command}` because input file '{path}' does not exist")
        if self.out_dir.exists() and not self.out_dir.is_dir():
            raise InputError(f"Cannot run `{self.command}` because --out '{self.out_dir}' is not a directory")
        return self

    def angle(self, value: float) -> float:
        """Convert an angle flag to radians."""
        return value * math.pi if self.pi_units else value

    def output(self, name: str) -> Path:
        return self.out_dir / name
