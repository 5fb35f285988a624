from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class StateScore:
    """f_i = 1 - RMS_i / RMS̃_i for one basis state (f is None when RMS̃_i = 0)."""

    bitstring: str
    rms: float
    rms_decohered: float
    f: float | None

    @property
    def excluded(self) -> bool:
        return self.f is None


@dataclass(frozen=True)
class FidelityReport:
    """Per-state scores, their mean f_exp, and f_m for the marked state of experiment 3."""

    experiment: int
    n_qubits: int
    n_records: int
    per_state: tuple[StateScore, ...]
    f_exp: float | None
    f_m: float | None = None
    excluded: tuple[str, ...] = field(default_factory=tuple)

    def score_of(self, bitstring: str) -> StateScore:
        for s in self.per_state:
            if s.bitstring == bitstring:
                return s
        raise KeyError(f"Bitstring '{bitstring}' is not part of this report")

    def to_dict(self) -> dict:
        return {
            "experiment": self.experiment,
            "n_qubits": self.n_qubits,
            "n_records": self.n_records,
            "f_exp": self.f_exp,
            "f_m": self.f_m,
            "excluded": list(self.excluded),
            "per_state": [{"bitstring": s.bitstring, "f_i": s.f, "rms": s.rms, "rms_decohered": s.rms_decohered} for s in self.per_state],
        }
