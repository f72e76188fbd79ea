"""Web definitions: the two closed-form functions plus domain constraints."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..expr import COORDINATES, Expr, ExprSyntaxError, parse_expression

RELATIONS = ("!=", ">", "<")


@dataclass(frozen=True)
class Constraint:
    expr: Expr
    relation: str  # one of RELATIONS, always against 0
    text: str = ""

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")

    def satisfied(self, value, margin: float = 0.0):
        """Elementwise check with a safety margin."""
        if self.relation == "!=":
            return abs(value) >= margin if margin else value != 0
        if self.relation == ">":
            return value >= margin if margin else value > 0
        return value <= -margin if margin else value < 0

    def __str__(self) -> str:
        return self.text or f"{self.expr} {self.relation} 0"


_REL = re.compile(r"(!=|≠|>|<)")


def parse_constraint(text: str) -> Constraint:
    """Parse ``<expr> != 0``, ``<expr> > 0`` or ``<expr> < 0``.

    A nonzero right-hand side is accepted and moved to the left.
    """
    parts = _REL.split(text)
    if len(parts) != 3:
        raise ExprSyntaxError("constraint needs exactly one of !=, >, <", text, 0)
    lhs, rel, rhs = parts
    rel = "!=" if rel == "≠" else rel
    try:
        left = parse_expression(lhs)
    except ExprSyntaxError as e:
        raise ExprSyntaxError(e.message, text, e.position) from None
    try:
        right = parse_expression(rhs)
    except ExprSyntaxError as e:
        raise ExprSyntaxError(e.message, text, e.position + len(lhs) + len(rel)) from None
    from ..expr import Const

    expr = left if isinstance(right, Const) and right.value == 0 else left - right
    return Constraint(expr, rel, text.strip())


@dataclass(frozen=True)
class WebDefinition:
    name: str
    f1: Expr
    f2: Expr
    domain_constraints: tuple[Constraint, ...] = ()
    notes: str = ""
    # source text, kept so independent code paths need not go through our printer
    f1_text: str = field(default="", compare=False)
    f2_text: str = field(default="", compare=False)

    def __post_init__(self):
        for f in (self.f1, self.f2):
            stray = f.free_vars - set(COORDINATES)
            if stray:
                raise ValueError(f"unknown variables {sorted(stray)}")
        if not self.f1_text:
            object.__setattr__(self, "f1_text", str(self.f1))
        if not self.f2_text:
            object.__setattr__(self, "f2_text", str(self.f2))

    @classmethod
    def from_text(
        cls,
        name: str,
        f1: str,
        f2: str,
        domain: list[str] | tuple[str, ...] = (),
        notes: str = "",
    ) -> "WebDefinition":
        return cls(
            name=name,
            f1=parse_expression(f1),
            f2=parse_expression(f2),
            domain_constraints=tuple(parse_constraint(d) for d in domain),
            notes=notes,
            f1_text=f1,
            f2_text=f2,
        )
