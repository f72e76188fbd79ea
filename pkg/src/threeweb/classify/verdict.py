"""Decision procedure: an identity holds, fails or is undetermined on a sample set."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ..engine import FrameBatch, WebDefinition, frame_batch
from ..expr import Point
from .identities import Context, lookup, residuals
from .sampling import SampleSet

TOL_ZERO = 1e-9
TOL_NONZERO = 1e-6


class Status(str, Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    UNDETERMINED = "UNDETERMINED"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class IdentityVerdict:
    identity_id: str
    status: Status
    max_residual: float
    witness: Point | None = None
    residuals: tuple[float, ...] = field(default=(), repr=False, compare=False)

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def fails(self) -> bool:
        return self.status is Status.FAILS

    def as_dict(self) -> dict:
        return {
            "status": self.status.value,
            "max_residual": self.max_residual,
            "witness": None if self.witness is None else list(self.witness.as_tuple()),
        }


def decide(identity_id: str, res: np.ndarray, points: np.ndarray, tol_zero: float, tol_nonzero: float) -> IdentityVerdict:
    res = np.asarray(res, dtype=float)
    worst = int(np.argmax(res))
    top = float(res[worst])
    if top > tol_nonzero:
        status = Status.FAILS
        witness = Point(*(float(v) for v in points[worst]))
    elif top < tol_zero:
        status, witness = Status.HOLDS, None
    else:
        status, witness = Status.UNDETERMINED, None
    return IdentityVerdict(identity_id, status, top, witness, tuple(float(r) for r in res))


def evaluate_identity(
    web: WebDefinition,
    identity_id: str,
    batch: FrameBatch,
    *,
    tol_zero: float = TOL_ZERO,
    tol_nonzero: float = TOL_NONZERO,
) -> IdentityVerdict:
    ident = lookup(identity_id)
    res = residuals(ident.build(Context(web, batch)))
    return decide(identity_id, res, batch.points, tol_zero, tol_nonzero)


def test_identity(
    web: WebDefinition,
    identity_id: str,
    samples: SampleSet,
    *,
    tol_zero: float = TOL_ZERO,
    tol_nonzero: float = TOL_NONZERO,
) -> IdentityVerdict:
    """Verdict for one registered identity over the sample set."""
    lookup(identity_id)  # fail fast on unknown ids
    batch = frame_batch(web, samples.array())
    return evaluate_identity(web, identity_id, batch, tol_zero=tol_zero, tol_nonzero=tol_nonzero)


test_identity.__test__ = False  # not a pytest test
