"""Expression kernel: parser, symbolic derivatives, evaluator, simplifier."""

from __future__ import annotations

from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from threeweb.expr import (
    COORDINATES,
    Add,
    Const,
    DivisionByZero,
    ExprSyntaxError,
    NonFiniteResult,
    Point,
    Pow,
    UnknownIdentifier,
    Var,
    differentiate,
    evaluate,
    parse_expression,
    partial,
    simplify,
    to_text,
)
from threeweb.oracle import central_difference, compile_function

EX1_F1 = "x1 + y1 + (1/2)*x1^2*y2"


# -- parser ------------------------------------------------------------------------

def test_parse_sum_of_variables():
    e = parse_expression("x1 + y1")
    assert isinstance(e, Add)
    assert {t.name for t in e.terms} == {"x1", "y1"}


@pytest.mark.parametrize("text, pt, want", [
    (EX1_F1, (1, 0, 0, 2), 2.0),
    ("x2*y2*exp(x1*y1)", (0, 2, 5, 3), 6.0),
    ("x1 + y1", (1, 0, 2, 0), 3.0),
])
def test_parse_and_evaluate(text, pt, want):
    assert float(evaluate(parse_expression(text), Point(*pt))) == pytest.approx(want, rel=1e-15)


def test_decimal_literals_are_exact():
    e = parse_expression("0.1*x1")
    consts = [n for n in e.factors if isinstance(n, Const)] if hasattr(e, "factors") else []
    assert consts and consts[0].value == Fraction(1, 10)


def test_unary_minus_binds_looser_than_power():
    e = parse_expression("-x1^2")
    assert float(evaluate(e, Point(3, 0, 0, 0))) == -9.0


def test_negative_exponents():
    for text in ("x1^-2", "x1^(-2)"):
        assert float(evaluate(parse_expression(text), Point(2, 0, 0, 0))) == 0.25


@pytest.mark.parametrize("text, pos", [("x1 + * y1", 5), ("x1 + (y1", 8), ("x1 ^ y1", 5)])
def test_syntax_error_reports_position(text, pos):
    with pytest.raises(ExprSyntaxError) as info:
        parse_expression(text)
    assert info.value.position == pos


def test_unknown_identifier():
    with pytest.raises(UnknownIdentifier):
        parse_expression("z1 + 1")
    with pytest.raises(UnknownIdentifier):
        parse_expression("log(x1)")


# -- differentiation -------------------------------------------------------------------

@pytest.mark.parametrize("text, v, want", [
    ("x1 + y1", "x1", "1"),
    ("x1*y2 + x2*y1", "y2", "x1"),
    ("exp(x1*y1)", "x1", "y1*exp(x1*y1)"),
])
def test_differentiate_examples(text, v, want):
    got = differentiate(parse_expression(text), v)
    pt = Point(0.3, -1.2, 0.7, 2.1)
    assert float(evaluate(got, pt)) == pytest.approx(float(evaluate(parse_expression(want), pt)), rel=1e-15)


def test_partial_multi_index_matches_nested():
    e = parse_expression("x1^3*y2^2*exp(x2*y1)")
    nested = differentiate(differentiate(differentiate(e, "x1"), "y2"), "x1")
    pt = Point(0.4, 0.5, -0.6, 1.1)
    assert float(evaluate(partial(e, {"x1": 2, "y2": 1}), pt)) == pytest.approx(float(evaluate(nested, pt)), rel=1e-14)


def test_derivative_cache_returns_same_tree():
    e = parse_expression(EX1_F1)
    assert differentiate(e, "y2") is differentiate(e, "y2")


# -- evaluation errors ---------------------------------------------------------------

def test_division_guard():
    with pytest.raises(DivisionByZero):
        evaluate(parse_expression("1/(x1 - 1)"), Point(1, 0, 0, 0))
    with pytest.raises(DivisionByZero):
        evaluate(parse_expression("x2^-3"), Point(0, 1e-5, 0, 0))


def test_overflow_is_reported():
    with pytest.raises(NonFiniteResult):
        evaluate(parse_expression("exp(exp(x1))"), Point(10, 0, 0, 0))


# -- simplify ------------------------------------------------------------------------

@pytest.mark.parametrize("text, want", [("0*x1 + y1", "y1"), ("x1^1 * 1", "x1"), ("(2/4)*x1", "x1/2")])
def test_simplify_examples(text, want):
    assert to_text(simplify(parse_expression(text))) == want


# -- properties ----------------------------------------------------------------------

@st.composite
def expressions(draw, depth=3):
    """DSL text for an expression that is finite and division-safe on [-2, 2]^4."""
    if depth == 0 or draw(st.integers(0, 3)) == 0:
        if draw(st.booleans()):
            return draw(st.sampled_from(COORDINATES))
        n, d = draw(st.integers(-5, 5)), draw(st.integers(1, 4))
        return f"({n}/{d})"
    kind = draw(st.sampled_from(["+", "-", "*", "^", "exp", "div"]))
    a = draw(expressions(depth - 1))
    if kind == "^":
        return f"({a})^{draw(st.integers(0, 3))}"
    if kind == "exp":
        return f"exp(({a})/(4 + ({a})^2))"  # argument bounded by 1/4
    b = draw(expressions(depth - 1))
    if kind == "div":
        return f"({a})/(2 + ({b})^2)"
    return f"({a}) {kind} ({b})"


points = st.tuples(*[st.floats(-2, 2, allow_nan=False) for _ in range(4)])


def _mp_partial(text: str, pt, v: str) -> mpmath.mpf:
    f = compile_function(text)
    k = COORDINATES.index(v)
    with mpmath.workdps(40):
        base = [mpmath.mpf(c) for c in pt]

        def along(t):
            z = list(base)
            z[k] = t
            return f(*z)

        return central_difference(along, base[k], mpmath.mpf("1e-5"))


@settings(max_examples=1000, deadline=None)
@given(expressions(), points, st.sampled_from(COORDINATES))
def test_derivative_matches_finite_differences(text, pt, v):
    got = float(evaluate(differentiate(parse_expression(text), v), Point(*pt)))
    want = float(_mp_partial(text, pt, v))
    if abs(want) > 1e-8:
        assert abs(got - want) <= 1e-6 * abs(want)
    else:
        assert abs(got - want) <= 1e-6


@settings(max_examples=200, deadline=None)
@given(expressions(), points, st.sampled_from(COORDINATES), st.sampled_from(COORDINATES))
def test_mixed_partials_commute(text, pt, u, v):
    e = parse_expression(text)
    uv = float(evaluate(differentiate(differentiate(e, u), v), Point(*pt)))
    vu = float(evaluate(differentiate(differentiate(e, v), u), Point(*pt)))
    assert abs(uv - vu) <= 1e-10 * max(1.0, abs(uv))


@settings(max_examples=300, deadline=None)
@given(expressions(), points)
def test_simplify_preserves_value(text, pt):
    e = parse_expression(text)
    a = evaluate(e, Point(*pt))
    b = evaluate(simplify(e), Point(*pt))
    assert abs(float(a - b)) <= 1e-12 * (1 + abs(float(a)))


@settings(max_examples=300, deadline=None)
@given(expressions(), points)
def test_print_parse_round_trip(text, pt):
    e = parse_expression(text)
    again = parse_expression(to_text(e))
    a, b = evaluate(e, Point(*pt)), evaluate(again, Point(*pt))
    assert abs(float(a - b)) <= 1e-13 * (1 + abs(float(a)))


def test_program_matches_pointwise_evaluation():
    from threeweb.expr import Program
    exprs = [parse_expression(t) for t in (EX1_F1, "x2*y2*exp(x1*y1)", "1/(3 + x1^2)")]
    X = np.random.default_rng(0).uniform(-2, 2, size=(7, 4))
    vals, bad = Program(exprs).run(X)
    assert not bad.any()
    for e, col in zip(exprs, vals):
        for row, v in zip(X, col):
            assert v == evaluate(e, Point(*row))


def test_var_names_are_restricted():
    with pytest.raises((ValueError, TypeError)):
        Var("z1")
    assert isinstance(parse_expression("x1^2"), Pow)
