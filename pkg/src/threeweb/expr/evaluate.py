"""Point evaluation of expression DAGs.

A ``Program`` flattens the distinct nodes of a set of roots into a slot
list once; running it over a batch of points evaluates each node exactly
once with numpy arrays. The default dtype is ``numpy.longdouble`` (18
significant digits on x86-64), which keeps deep derivative trees well
inside the tolerances used downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .nodes import COORDINATES, Add, Const, Div, Exp, Expr, Mul, Neg, Pow, Var, postorder

EPS_DIV = 1e-12
DEFAULT_DTYPE = np.longdouble


class EvaluationError(ArithmeticError):
    def __init__(self, message: str, row: int | None = None):
        self.row = row
        super().__init__(message)


class DivisionByZero(EvaluationError):
    pass


class NonFiniteResult(EvaluationError):
    pass


@dataclass(frozen=True)
class Point:
    x1: float
    x2: float
    y1: float
    y2: float

    def __post_init__(self):
        for c in COORDINATES:
            if not math.isfinite(float(getattr(self, c))):
                raise ValueError(f"coordinate {c} is not finite")

    def as_tuple(self) -> tuple:
        return (self.x1, self.x2, self.y1, self.y2)

    @classmethod
    def of(cls, values: Sequence) -> "Point":
        if len(values) != 4:
            raise ValueError("a point needs exactly four coordinates")
        return cls(*values)


def to_dtype(value: Fraction, dtype=DEFAULT_DTYPE):
    num, den = value.numerator, value.denominator
    if abs(num) < 2**62 and den < 2**62:
        return dtype(num) / dtype(den)
    return dtype(str(num)) / dtype(str(den))


def _short(e: Expr, limit: int = 80) -> str:
    s = str(e)
    return s if len(s) <= limit else s[: limit - 3] + "..."


class Program:
    """Compiled evaluation order for a fixed list of root expressions."""

    def __init__(self, roots: Iterable[Expr]):
        self.roots = list(roots)
        self.order = postorder(self.roots)
        self.slot = {id(n): i for i, n in enumerate(self.order)}

    def run(
        self,
        points,
        *,
        dtype=DEFAULT_DTYPE,
        eps_div: float = EPS_DIV,
        strict: bool = True,
    ) -> tuple[list[np.ndarray], np.ndarray]:
        """Evaluate every root at every row of ``points`` (shape (n, 4)).

        Returns the root values and a boolean mask of rows where some
        division was guarded or a value went non-finite. In strict mode
        such rows raise instead.
        """
        X = np.asarray(points, dtype=dtype)
        if X.ndim == 1:
            X = X.reshape(1, -1)
        nrows = X.shape[0]
        bad = np.zeros(nrows, dtype=bool)
        eps = dtype(eps_div)
        vals: list = [None] * len(self.order)
        slot = self.slot
        with np.errstate(all="ignore"):
            for i, n in enumerate(self.order):
                if isinstance(n, Const):
                    v = to_dtype(n.value, dtype)
                elif isinstance(n, Var):
                    v = X[:, COORDINATES.index(n.name)]
                elif isinstance(n, Neg):
                    v = -vals[slot[id(n.arg)]]
                elif isinstance(n, Add):
                    it = iter(n.terms)
                    v = vals[slot[id(next(it))]]
                    for t in it:
                        v = v + vals[slot[id(t)]]
                elif isinstance(n, Mul):
                    it = iter(n.factors)
                    v = vals[slot[id(next(it))]]
                    for f in it:
                        v = v * vals[slot[id(f)]]
                elif isinstance(n, Div):
                    den = self._guard(vals[slot[id(n.den)]], eps, n.den, bad, strict, nrows)
                    v = vals[slot[id(n.num)]] / den
                elif isinstance(n, Pow):
                    b = vals[slot[id(n.base)]]
                    k = n.exponent
                    if k >= 0:
                        v = b**k
                    else:
                        den = self._guard(b ** (-k), eps, n, bad, strict, nrows)
                        v = dtype(1) / den
                elif isinstance(n, Exp):
                    v = np.exp(vals[slot[id(n.arg)]])
                else:
                    raise TypeError(f"unknown node {type(n).__name__}")
                if not isinstance(n, (Const, Var)):
                    fin = np.isfinite(v)
                    if not np.all(fin):
                        rows = np.broadcast_to(~fin, (nrows,))
                        if strict and np.any(rows & ~bad):
                            r = int(np.flatnonzero(rows & ~bad)[0])
                            raise NonFiniteResult(
                                f"non-finite value of {_short(n)}", row=r
                            )
                        bad |= rows
                vals[i] = v
        out = [
            np.broadcast_to(vals[slot[id(r)]], (nrows,)).astype(dtype, copy=True)
            for r in self.roots
        ]
        return out, bad

    @staticmethod
    def _guard(den, eps, node, bad, strict, nrows):
        small = np.broadcast_to(np.abs(den) < eps, (nrows,))
        if np.any(small):
            if strict:
                r = int(np.flatnonzero(small)[0])
                raise DivisionByZero(
                    f"denominator {_short(node)} vanishes (|.| < {float(eps):g})", row=r
                )
            bad |= small
            den = np.where(np.broadcast_to(small, np.shape(den) or (nrows,)), np.nan, den)
        return den


def _as_row(pt) -> list:
    if isinstance(pt, Point):
        return list(pt.as_tuple())
    return list(pt)


def evaluate(e: Expr, pt, *, dtype=DEFAULT_DTYPE, eps_div: float = EPS_DIV):
    """Value of e at one point (a Point or a 4-sequence)."""
    (v,), _ = Program([e]).run([_as_row(pt)], dtype=dtype, eps_div=eps_div)
    return v[0]


def evaluate_many(
    exprs: Sequence[Expr], points, *, dtype=DEFAULT_DTYPE, eps_div: float = EPS_DIV
) -> list[np.ndarray]:
    """Values of several expressions over a batch of points; raises on bad rows."""
    rows = [_as_row(p) for p in points] if not isinstance(points, np.ndarray) else points
    out, _ = Program(exprs).run(rows, dtype=dtype, eps_div=eps_div)
    return out
