"""Run configuration shared by the CLI and the experiment scripts."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .exactla import DEFAULT_PRIME


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    cutoff: int = 12
    prime: int = DEFAULT_PRIME
    samples: int = 50
    json: bool = False

    def __post_init__(self):
        if self.cutoff < 1:
            raise ValueError("cutoff must be at least 1")
        if not (-2**63 <= self.seed < 2**64):
            raise ValueError("seed must fit in 64 bits")

    def as_dict(self) -> dict:
        return asdict(self)
