"""Symbolic scalar expressions over the coordinates x1, x2, y1, y2."""

from .calculus import differentiate, gradient, partial
from .evaluate import (
    DEFAULT_DTYPE,
    EPS_DIV,
    DivisionByZero,
    EvaluationError,
    NonFiniteResult,
    Point,
    Program,
    evaluate,
    evaluate_many,
)
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
    const,
    div,
    exp,
    mul,
    neg,
    node_count,
    power,
    var,
)
from .parser import ExprSyntaxError, UnknownIdentifier, parse_expression
from .printer import to_text
from .simplify import simplify

__all__ = [
    "COORDINATES", "ONE", "ZERO", "Add", "Const", "Div", "Exp", "Expr", "Mul",
    "Neg", "Pow", "Var", "add", "const", "div", "exp", "mul", "neg", "power",
    "var", "node_count", "differentiate", "gradient", "partial", "DEFAULT_DTYPE",
    "EPS_DIV", "DivisionByZero", "EvaluationError", "NonFiniteResult", "Point",
    "Program", "evaluate", "evaluate_many", "ExprSyntaxError",
    "UnknownIdentifier", "parse_expression", "to_text", "simplify",
]
