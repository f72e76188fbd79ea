"""Fourth foliation of an extendable web and the abelian 2-equation check."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

import numpy as np

from ..expr import COORDINATES, DEFAULT_DTYPE, Expr, Program, differentiate
from .invariants import EngineError, FrameInvariants, SingularJacobian, _as_points

ISOCLINIC_TOL = 1e-12

# dx1∧dx2, dx1∧dy1, dx1∧dy2, dx2∧dy1, dx2∧dy2, dy1∧dy2
TWO_FORM_BASIS: tuple[tuple[int, int], ...] = tuple(combinations(range(4), 2))


class IsoclinicAtPoint(EngineError):
    pass


def fourth_foliation_covectors(
    inv: FrameInvariants, tol: float = ISOCLINIC_TOL
) -> tuple[np.ndarray, np.ndarray]:
    """The forms p ω₁ⁱ + q ω₂ⁱ (i = 1, 2) over the cobasis dx¹, dx², dy¹, dy²."""
    p, q = inv.pq.p, inv.pq.q
    if abs(p) < tol and abs(q) < tol:
        raise IsoclinicAtPoint(f"p = {float(p):.3g}, q = {float(q):.3g}")
    fb, ft = inv.jac.f_bar, inv.jac.f_tilde
    return tuple(
        np.concatenate([p * fb[i], q * ft[i]]) for i in range(2)
    )


def wedge(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Coefficients of u∧v on TWO_FORM_BASIS; u, v have a trailing axis of length 4."""
    return np.stack([u[..., a] * v[..., b] - u[..., b] * v[..., a] for a, b in TWO_FORM_BASIS], axis=-1)


def _gradients(pair: Sequence[Expr], X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    roots = [differentiate(f, c) for f in pair for c in COORDINATES]
    vals, _ = Program(roots).run(X, dtype=X.dtype.type)
    g = np.stack(vals, axis=1).reshape(-1, 2, 4)
    for name, block in (("x", g[:, :, :2]), ("y", g[:, :, 2:])):
        det = block[:, 0, 0] * block[:, 1, 1] - block[:, 0, 1] * block[:, 1, 0]
        if np.any(np.abs(det) < 1e-10):
            raise SingularJacobian(f"singular {name}-Jacobian of a foliation pair")
    return g[:, 0], g[:, 1]


def abelian_two_form(u3: Sequence[Expr], u4: Sequence[Expr], points) -> np.ndarray:
    """2dx¹∧dx² + 2dy¹∧dy² − du₃¹∧du₃² + du₄¹∧du₄² at each point, shape (n, 6)."""
    X = _as_points(points, DEFAULT_DTYPE)
    a1, a2 = _gradients(u3, X)
    b1, b2 = _gradients(u4, X)
    form = -wedge(a1, a2) + wedge(b1, b2)
    form[:, TWO_FORM_BASIS.index((0, 1))] += 2
    form[:, TWO_FORM_BASIS.index((2, 3))] += 2
    return form


def abelian_equation_residual(u3: Sequence[Expr], u4: Sequence[Expr], pt) -> float:
    """Max-norm of the abelian 2-form combination at one point."""
    return float(np.abs(abelian_two_form(u3, u4, pt)[0]).max())
