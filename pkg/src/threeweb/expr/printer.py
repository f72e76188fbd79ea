"""Text form of expressions in the input DSL (parse(to_text(e)) evaluates like e)."""

from __future__ import annotations

from fractions import Fraction

from .nodes import Add, Const, Div, Exp, Expr, Mul, Neg, Pow, Var, postorder

# binding strength of the rendered text, used to decide on parentheses
_ATOM, _POW, _PROD, _SUM = 4, 3, 2, 1


def to_text(e: Expr) -> str:
    # iterative so that very deep derivative trees do not hit the recursion limit
    out: dict[Expr, tuple[str, int]] = {}
    for n in postorder([e]):
        out[n] = _render(n, out)
    return out[e][0]


def _frac(v: Fraction) -> tuple[str, int]:
    if v.denominator == 1:
        return (str(v), _ATOM) if v >= 0 else (f"({v})", _ATOM)
    return f"({v.numerator}/{v.denominator})", _ATOM


def _p(item: tuple[str, int], need: int) -> str:
    text, strength = item
    return text if strength >= need else f"({text})"


def _power_text(base: tuple[str, int], k: int) -> str:
    return _p(base, _ATOM) + ("" if k == 1 else f"^{k}")


def _product(n: Mul, out) -> tuple[str, int]:
    """Render a product, moving negative powers into a denominator."""
    coeff = Fraction(1)
    num: list[str] = []
    den: list[str] = []
    for f in n.factors:
        if isinstance(f, Const):
            coeff *= f.value
        elif isinstance(f, Pow) and f.exponent < 0:
            den.append(_power_text(out[f.base], -f.exponent))
        else:
            num.append(_p(out[f], _POW))
    sign = "-" if coeff < 0 else ""
    coeff = abs(coeff)
    if coeff.numerator != 1 or not num:
        num.insert(0, str(coeff.numerator))
    if coeff.denominator != 1:
        den.insert(0, str(coeff.denominator))
    text = "*".join(num)
    if den:
        d = den[0] if len(den) == 1 else "(" + "*".join(den) + ")"
        text = f"{text}/{d}"
    if sign:
        return "-" + text, _SUM
    return text, _PROD


def _render(n: Expr, out) -> tuple[str, int]:
    if isinstance(n, Const):
        return _frac(n.value)
    if isinstance(n, Var):
        return n.name, _ATOM
    if isinstance(n, Exp):
        return f"exp({out[n.arg][0]})", _ATOM
    if isinstance(n, Neg):
        return "-" + _p(out[n.arg], _PROD), _SUM
    if isinstance(n, Pow):
        if n.exponent < 0:
            return "1/" + _power_text(out[n.base], -n.exponent), _PROD
        return _power_text(out[n.base], n.exponent), _POW
    if isinstance(n, Mul):
        return _product(n, out)
    if isinstance(n, Div):
        return f"{_p(out[n.num], _PROD)}/{_p(out[n.den], _POW)}", _PROD
    if isinstance(n, Add):
        pieces: list[str] = []
        for i, t in enumerate(n.terms):
            text, strength = out[t]
            if i == 0:
                pieces.append(text)
            elif isinstance(t, Const) and t.value < 0:
                pieces.append(" - " + _frac(-t.value)[0])
            elif strength == _SUM and _negated_term(t):
                pieces.append(" - " + text[1:])
            else:
                pieces.append(" + " + _p((text, strength), _PROD))
        return "".join(pieces), _SUM
    raise TypeError(f"unknown node {type(n).__name__}")


def _negated_term(t: Expr) -> bool:
    """True when the rendered text of t is a leading '-' applied to a product or atom."""
    if isinstance(t, Neg):
        return True
    if isinstance(t, Const):
        return t.value < 0
    if isinstance(t, Mul):
        c = Fraction(1)
        for f in t.factors:
            if isinstance(f, Const):
                c *= f.value
        return c < 0
    return False
