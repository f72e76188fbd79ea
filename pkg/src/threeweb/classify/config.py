"""Run configuration shared by the classifier, the corpus runner and the CLI."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .sampling import MIN_SAMPLES

FORMATS = ("text", "json")


@dataclass(frozen=True)
class RunConfig:
    samples: int = 20
    seed: int = 42
    tol_zero: float = 1e-9
    tol_nonzero: float = 1e-6
    box_halfwidth: float = 3.0
    format: str = "text"

    def __post_init__(self):
        if self.samples < MIN_SAMPLES:
            raise ValueError(f"samples must be at least {MIN_SAMPLES}")
        if not (0 < self.tol_zero < self.tol_nonzero):
            raise ValueError("need 0 < tol_zero < tol_nonzero")
        if self.box_halfwidth <= 0:
            raise ValueError("box_halfwidth must be positive")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")

    def echo(self) -> dict:
        d = asdict(self)
        d.pop("format")
        return d
