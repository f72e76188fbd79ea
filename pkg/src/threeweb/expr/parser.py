"""Recursive-descent parser for the expression DSL.

    expr   := term (('+'|'-') term)*
    term   := unary (('*'|'/') unary)*
    unary  := ('-'|'+') unary | factor
    factor := base ('^' integer)?
    base   := number | ident | '(' expr ')' | 'exp' '(' expr ')'

A leading minus applies to the whole factor, so ``-x1^2`` is ``-(x1^2)``.
Exponents may be written ``^3``, ``^-2`` or ``^(-2)``. Numbers are decimal
literals (optionally with an exponent) and are converted to exact rationals.
The tree is built with the raw node constructors; nothing is folded.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .nodes import COORDINATES, Add, Const, Div, Exp, Expr, Mul, Neg, Pow, Var


class ExprSyntaxError(ValueError):
    """Malformed expression text; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, text: str, position: int):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")

    def caret(self) -> str:
        return f"{self.text}\n{' ' * self.position}^"


class UnknownIdentifier(ExprSyntaxError):
    pass


_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*/^()])"
    r")"
)


@dataclass(frozen=True)
class _Tok:
    kind: str  # num, ident, op, end
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    i = 0
    n = len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if m is None or m.end() == i or m.lastgroup is None:
            raise ExprSyntaxError(f"unexpected character {text[i]!r}", text, i)
        kind = m.lastgroup
        toks.append(_Tok(kind, m.group(kind), m.start(kind)))
        i = m.end()
    toks.append(_Tok("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def _err(self, msg: str, tok: _Tok | None = None) -> ExprSyntaxError:
        tok = tok or self.cur
        return ExprSyntaxError(msg, self.text, tok.pos)

    def _accept(self, op: str) -> bool:
        if self.cur.kind == "op" and self.cur.text == op:
            self.i += 1
            return True
        return False

    def _expect(self, op: str) -> None:
        if not self._accept(op):
            found = self.cur.text or "end of input"
            raise self._err(f"expected {op!r}, found {found!r}")

    def parse(self) -> Expr:
        if self.cur.kind == "end":
            raise self._err("empty expression")
        e = self.expr()
        if self.cur.kind != "end":
            raise self._err(f"unexpected {self.cur.text!r}")
        return e

    def expr(self) -> Expr:
        terms = [self.term()]
        while self.cur.kind == "op" and self.cur.text in "+-":
            op = self.cur.text
            self.i += 1
            t = self.term()
            terms.append(Neg.raw(t) if op == "-" else t)
        return terms[0] if len(terms) == 1 else Add.raw(terms)

    def term(self) -> Expr:
        e = self.unary()
        factors = [e]
        while self.cur.kind == "op" and self.cur.text in "*/":
            op = self.cur.text
            self.i += 1
            rhs = self.unary()
            if op == "*":
                factors.append(rhs)
            else:
                lhs = factors[0] if len(factors) == 1 else Mul.raw(factors)
                factors = [Div.raw(lhs, rhs)]
        return factors[0] if len(factors) == 1 else Mul.raw(factors)

    def unary(self) -> Expr:
        if self._accept("-"):
            return Neg.raw(self.unary())
        if self._accept("+"):
            return self.unary()
        return self.factor()

    def factor(self) -> Expr:
        b = self.base()
        if self._accept("^"):
            k = self._integer()
            b = Pow.raw(b, k)
            if self.cur.kind == "op" and self.cur.text == "^":
                raise self._err("chained '^' needs parentheses")
        return b

    def _integer(self) -> int:
        paren = self._accept("(")
        sign = -1 if self._accept("-") else 1
        tok = self.cur
        if tok.kind != "num" or not re.fullmatch(r"\d+", tok.text):
            raise self._err("exponent must be an integer literal")
        self.i += 1
        if paren:
            self._expect(")")
        return sign * int(tok.text)

    def base(self) -> Expr:
        tok = self.cur
        if tok.kind == "num":
            self.i += 1
            return Const.raw(Fraction(tok.text))
        if tok.kind == "ident":
            self.i += 1
            if tok.text == "exp":
                self._expect("(")
                arg = self.expr()
                self._expect(")")
                return Exp.raw(arg)
            if tok.text not in COORDINATES:
                raise UnknownIdentifier(
                    f"unknown identifier {tok.text!r} (allowed: x1, x2, y1, y2, exp)",
                    self.text,
                    tok.pos,
                )
            return Var.raw(tok.text)
        if self._accept("("):
            e = self.expr()
            self._expect(")")
            return e
        found = tok.text or "end of input"
        raise self._err(f"unexpected {found!r}")


def parse_expression(text: str) -> Expr:
    """Parse DSL text into an (unsimplified) expression tree."""
    return _Parser(text).parse()
