"""Exact symbolic partial derivatives.

Every node memoizes its own derivatives (``node._deriv[var]``), so a
derivative of a shared DAG is computed once per distinct node and the
result is itself shared. Higher partials are taken in the fixed coordinate
order, which makes ``partial(e, (1, 0, 1, 0))`` hit the same cached trees
no matter how the multi-index was spelled.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .nodes import (
    COORDINATES,
    ONE,
    ZERO,
    Add,
    Const,
    Div,
    Exp,
    Expr,
    Mul,
    Neg,
    Pow,
    Var,
    add,
    div,
    mul,
    neg,
    postorder,
    power,
)


def _check_var(v: str) -> None:
    if v not in COORDINATES:
        raise ValueError(f"unknown coordinate {v!r}")


def _local(n: Expr, v: str) -> Expr:
    """d n / d v assuming children's derivatives are already cached."""
    if isinstance(n, Const):
        return ZERO
    if isinstance(n, Var):
        return ONE if n.name == v else ZERO
    d = lambda c: c._deriv[v] if v in c.free_vars else ZERO  # noqa: E731
    if isinstance(n, Neg):
        return neg(d(n.arg))
    if isinstance(n, Add):
        return add(*(d(t) for t in n.terms))
    if isinstance(n, Mul):
        fs = n.factors
        parts = []
        for i, f in enumerate(fs):
            df = d(f)
            if df is ZERO:
                continue
            parts.append(mul(*fs[:i], df, *fs[i + 1:]))
        return add(*parts) if parts else ZERO
    if isinstance(n, Div):
        dn, dd = d(n.num), d(n.den)
        first = div(dn, n.den) if dn is not ZERO else ZERO
        if dd is ZERO:
            return first
        return add(first, neg(div(mul(n.num, dd), power(n.den, 2))))
    if isinstance(n, Pow):
        k = n.exponent
        return mul(Const.raw(k), power(n.base, k - 1), d(n.base))
    if isinstance(n, Exp):
        return mul(n, d(n.arg))
    raise TypeError(f"unknown node {type(n).__name__}")


def differentiate(e: Expr, v: str) -> Expr:
    """Exact partial derivative of e with respect to the coordinate v."""
    _check_var(v)
    if v not in e.free_vars:
        return ZERO
    cached = e._deriv.get(v)
    if cached is not None:
        return cached
    # only the subgraph that depends on v needs visiting
    for n in postorder([e]):
        if v in n.free_vars and v not in n._deriv:
            n._deriv[v] = _local(n, v)
    return e._deriv[v]


def partial(e: Expr, orders: Sequence[int] | Mapping[str, int]) -> Expr:
    """Mixed partial; ``orders`` is a 4-tuple over (x1, x2, y1, y2) or a name->order map."""
    if isinstance(orders, Mapping):
        for k in orders:
            _check_var(k)
        counts = [int(orders.get(c, 0)) for c in COORDINATES]
    else:
        counts = [int(k) for k in orders]
        if len(counts) != len(COORDINATES):
            raise ValueError("multi-index must have four entries")
    if any(k < 0 for k in counts):
        raise ValueError("derivative orders must be nonnegative")
    out = e
    for name, k in zip(COORDINATES, counts):
        for _ in range(k):
            out = differentiate(out, name)
    return out


def gradient(e: Expr) -> tuple[Expr, ...]:
    return tuple(differentiate(e, c) for c in COORDINATES)
