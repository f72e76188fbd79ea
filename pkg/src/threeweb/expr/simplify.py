"""Value-preserving local rewrites."""

from __future__ import annotations

from .nodes import Expr, rebuild


def simplify(e: Expr) -> Expr:
    """Fold rational constants, drop zero summands and unit factors, flatten
    nested sums and products, and merge like terms and repeated factors.

    Every rewrite is local and exact, so the result evaluates like ``e`` at
    every point where ``e`` is defined. No canonical form is attempted.
    """
    return rebuild(e)
