"""Seeded rejection sampling of admitted points of a web's domain."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..engine import WebDefinition, fields_for
from ..engine.invariants import jacobian_arrays
from ..expr import DEFAULT_DTYPE, Point, Program

MIN_SAMPLES = 8
CONSTRAINT_MARGIN = 1e-6
DET_MIN = 1e-6
REJECTIONS_PER_SAMPLE = 10_000
# Γ, a, p_ij, q_ij and their partials above this are treated as on the singular
# locus: curvature there is a difference of terms ~FIELD_MAX², and roundoff
# would swamp tol_zero
FIELD_MAX = 1e4
_JACOBIAN_ROOTS = 10  # f̄, f̃ entries and both determinants lead every program


class SamplingExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class SampleSet:
    seed: int
    points: tuple[Point, ...]
    count: int
    box: float = 3.0
    rejected: int = 0

    def array(self, dtype=DEFAULT_DTYPE) -> np.ndarray:
        return np.array([p.as_tuple() for p in self.points], dtype=dtype)


def _admissible(web: WebDefinition, X: np.ndarray, level: int) -> np.ndarray:
    """Mask of candidate rows that lie in the regular domain."""
    ok = np.ones(X.shape[0], dtype=bool)
    if web.domain_constraints:
        prog = Program([c.expr for c in web.domain_constraints])
        vals, bad = prog.run(X, strict=False)
        ok &= ~bad
        for c, v in zip(web.domain_constraints, vals):
            ok &= np.nan_to_num(c.satisfied(v, CONSTRAINT_MARGIN), nan=False).astype(bool)
    _, _, det_b, det_t = _lenient_jacobians(web, X)
    ok &= np.abs(det_b) >= DET_MIN
    ok &= np.abs(det_t) >= DET_MIN
    # the invariants themselves must evaluate without guarded divisions
    if level > 0 and np.any(ok):
        vals, bad = fields_for(web).program(level).run(X, strict=False)
        ok &= ~bad
        for v in vals[_JACOBIAN_ROOTS:]:
            ok &= np.nan_to_num(np.abs(v), nan=np.inf) <= FIELD_MAX
    return ok


def _lenient_jacobians(web, X):
    try:
        return jacobian_arrays(web, X)
    except ArithmeticError:
        wf = fields_for(web)
        roots = [wf.det_bar, wf.det_tilde]
        (db, dt), bad = Program(roots).run(X, strict=False)
        db = np.where(bad, 0, db)
        dt = np.where(bad, 0, dt)
        return None, None, db, dt


def sample_points(
    web: WebDefinition,
    n: int,
    seed: int,
    *,
    box: float = 3.0,
    level: int = 3,
) -> SampleSet:
    """Draw n admitted points uniformly from [-box, box]^4, reproducibly.

    A point is admitted when every domain constraint holds with margin
    CONSTRAINT_MARGIN, both Jacobian determinants are at least DET_MIN in
    magnitude, and (for level > 0) the invariant fields evaluate without
    hitting the division guard and stay below FIELD_MAX.
    """
    if n < MIN_SAMPLES:
        raise ValueError(f"need at least {MIN_SAMPLES} samples, got {n}")
    rng = np.random.default_rng(seed)
    accepted: list[np.ndarray] = []
    rejected = 0
    limit = REJECTIONS_PER_SAMPLE * n
    batch = max(2 * n, 16)
    while len(accepted) < n:
        cand = rng.uniform(-box, box, size=(batch, 4))
        ok = _admissible(web, cand.astype(DEFAULT_DTYPE), level)
        for row, good in zip(cand, ok):
            if len(accepted) == n:
                break
            if good:
                accepted.append(row)
            else:
                rejected += 1
                if rejected > limit:
                    raise SamplingExhausted(
                        f"{web.name}: {rejected} draws rejected before finding {n} admitted points"
                    )
        batch = min(max(batch, 4 * (n - len(accepted))), 4096)
    pts = tuple(Point(*(float(v) for v in row)) for row in accepted)
    return SampleSet(seed=seed, points=pts, count=n, box=box, rejected=rejected)
