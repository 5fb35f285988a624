from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

# Relative increase of k over Grover's drawn next to each reference line
GROVER_K_MARGIN = 0.05


@dataclass(frozen=True)
class ClassScan:
    """Peak probability of one target class (joint with its inverse) at its own phase scale."""

    value: Fraction
    count: int
    joint_count: int
    ps: float | None
    sigma_ps: float | None
    peak_prob: float | None
    k_peak: int | None

    @property
    def skipped(self) -> bool:
        """True for the class at C̄, for which no phase scale exists."""
        return self.ps is None


@dataclass(frozen=True)
class GroverReference:
    n_marked: int
    k_grover: int

    @property
    def k_plus_5pct(self) -> float:
        return self.k_grover * (1 + GROVER_K_MARGIN)


@dataclass(frozen=True)
class ScanResult:
    """Result of scanning every class of a spectrum."""

    per_class: tuple[ClassScan, ...]
    grover_refs: tuple[GroverReference, ...]
    theta: float
    n_qubits: int

    def scanned(self) -> list[ClassScan]:
        return [c for c in self.per_class if not c.skipped]

    def skipped(self) -> list[ClassScan]:
        return [c for c in self.per_class if c.skipped]

    def for_value(self, value) -> ClassScan:
        target = Fraction(value)
        for c in self.per_class:
            if c.value == target:
                return c
        raise KeyError(f"Class C={target} is not part of this scan")
