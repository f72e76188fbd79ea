"""Immutable, interned expression nodes over the coordinates x1, x2, y1, y2.

Nodes are hash-consed: structurally equal trees are the same Python object,
so identity comparison is structural equality and shared subtrees are
stored (and differentiated, evaluated) once.

Two construction paths exist. ``Node.raw`` builds exactly the requested
node (the parser uses it so that ``simplify`` has something to do), while
the module-level smart constructors ``add``, ``mul``, ``div``, ``power``,
``neg`` and ``exp`` apply local value-preserving rewrites.
"""

from __future__ import annotations

import threading
import weakref
from fractions import Fraction
from typing import Iterable, Union

COORDINATES: tuple[str, ...] = ("x1", "x2", "y1", "y2")

Number = Union[int, Fraction]

_intern_lock = threading.Lock()
_intern: "weakref.WeakValueDictionary[tuple, Expr]" = weakref.WeakValueDictionary()


class Expr:
    """Base class. Subclasses define ``_fields`` and a ``kind`` tag."""

    __slots__ = ("_key", "_deriv", "_free", "__weakref__")
    kind = "expr"
    precedence = 100

    @classmethod
    def _make(cls, key: tuple, init) -> "Expr":
        node = _intern.get(key)
        if node is not None:
            return node
        with _intern_lock:
            node = _intern.get(key)
            if node is None:
                node = object.__new__(cls)
                init(node)
                node._key = key
                node._deriv = {}
                node._free = None
                _intern[key] = node
        return node

    def children(self) -> tuple["Expr", ...]:
        return ()

    @property
    def free_vars(self) -> frozenset[str]:
        if self._free is None:
            acc: set[str] = set()
            for c in self.children():
                acc |= c.free_vars
            self._free = frozenset(acc)
        return self._free

    # operators route through the smart constructors
    def __add__(self, other):
        return add(self, as_expr(other))

    def __radd__(self, other):
        return add(as_expr(other), self)

    def __sub__(self, other):
        return add(self, neg(as_expr(other)))

    def __rsub__(self, other):
        return add(as_expr(other), neg(self))

    def __mul__(self, other):
        return mul(self, as_expr(other))

    def __rmul__(self, other):
        return mul(as_expr(other), self)

    def __truediv__(self, other):
        return div(self, as_expr(other))

    def __rtruediv__(self, other):
        return div(as_expr(other), self)

    def __neg__(self):
        return neg(self)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("only integer powers are supported")
        return power(self, n)

    def __str__(self) -> str:
        from .printer import to_text

        return to_text(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"

    def __reduce__(self):
        # pickling goes through the text form so interning survives
        from .parser import parse_expression

        return (parse_expression, (str(self),))


class Const(Expr):
    __slots__ = ("value",)
    kind = "const"
    precedence = 100

    @classmethod
    def raw(cls, value: Number) -> "Const":
        v = Fraction(value)

        def init(n):
            n.value = v

        return cls._make(("c", v.numerator, v.denominator), init)


class Var(Expr):
    __slots__ = ("name",)
    kind = "var"

    @classmethod
    def raw(cls, name: str) -> "Var":
        if name not in COORDINATES:
            raise ValueError(f"unknown coordinate {name!r}")

        def init(n):
            n.name = name

        return cls._make(("v", name), init)

    @property
    def free_vars(self) -> frozenset[str]:
        return frozenset((self.name,))


class Neg(Expr):
    __slots__ = ("arg",)
    kind = "neg"
    precedence = 3

    @classmethod
    def raw(cls, arg: Expr) -> "Neg":
        def init(n):
            n.arg = arg

        return cls._make(("neg", arg), init)

    def children(self):
        return (self.arg,)


class Add(Expr):
    __slots__ = ("terms",)
    kind = "add"
    precedence = 1

    @classmethod
    def raw(cls, terms: Iterable[Expr]) -> "Add":
        terms = tuple(terms)

        def init(n):
            n.terms = terms

        return cls._make(("add", terms), init)

    def children(self):
        return self.terms


class Mul(Expr):
    __slots__ = ("factors",)
    kind = "mul"
    precedence = 2

    @classmethod
    def raw(cls, factors: Iterable[Expr]) -> "Mul":
        factors = tuple(factors)

        def init(n):
            n.factors = factors

        return cls._make(("mul", factors), init)

    def children(self):
        return self.factors


class Div(Expr):
    __slots__ = ("num", "den")
    kind = "div"
    precedence = 2

    @classmethod
    def raw(cls, num: Expr, den: Expr) -> "Div":
        def init(n):
            n.num = num
            n.den = den

        return cls._make(("div", num, den), init)

    def children(self):
        return (self.num, self.den)


class Pow(Expr):
    __slots__ = ("base", "exponent")
    kind = "pow"
    precedence = 4

    @classmethod
    def raw(cls, base: Expr, exponent: int) -> "Pow":
        if not isinstance(exponent, int):
            raise TypeError("IntegerPower exponent must be an int")

        def init(n):
            n.base = base
            n.exponent = exponent

        return cls._make(("pow", base, exponent), init)

    def children(self):
        return (self.base,)


class Exp(Expr):
    __slots__ = ("arg",)
    kind = "exp"
    precedence = 100

    @classmethod
    def raw(cls, arg: Expr) -> "Exp":
        def init(n):
            n.arg = arg

        return cls._make(("exp", arg), init)

    def children(self):
        return (self.arg,)


ZERO = Const.raw(0)
ONE = Const.raw(1)


def const(value: Number) -> Const:
    return Const.raw(value)


def var(name: str) -> Var:
    return Var.raw(name)


def as_expr(value) -> Expr:
    if isinstance(value, Expr):
        return value
    if isinstance(value, (int, Fraction)):
        return Const.raw(value)
    raise TypeError(f"cannot use {type(value).__name__} as an expression")


def is_const(e: Expr, value: Number | None = None) -> bool:
    if not isinstance(e, Const):
        return False
    return value is None or e.value == value


# -- smart constructors ------------------------------------------------------

def _split_coeff(e: Expr) -> tuple[Fraction, Expr | None]:
    """Write e as coeff * rest, rest None meaning a pure constant."""
    if isinstance(e, Const):
        return e.value, None
    if isinstance(e, Neg):
        c, rest = _split_coeff(e.arg)
        return -c, rest
    if isinstance(e, Mul) and isinstance(e.factors[0], Const):
        rest = e.factors[1:]
        return e.factors[0].value, rest[0] if len(rest) == 1 else Mul.raw(rest)
    return Fraction(1), e


def _scaled(c: Fraction, rest: Expr) -> Expr:
    if c == 1:
        return rest
    if c == -1:
        return Neg.raw(rest)
    factors = rest.factors if isinstance(rest, Mul) else (rest,)
    return Mul.raw((Const.raw(c),) + factors)


def add(*terms: Expr) -> Expr:
    coeffs: dict[Expr, Fraction] = {}
    total = Fraction(0)
    stack = [(Fraction(1), t) for t in reversed(terms)]
    while stack:
        scale, t = stack.pop()
        c, rest = _split_coeff(t)
        c *= scale
        if rest is None:
            total += c
        elif isinstance(rest, Add):
            stack.extend((c, s) for s in reversed(rest.terms))
        else:
            coeffs[rest] = coeffs.get(rest, Fraction(0)) + c
    out = [_scaled(c, r) for r, c in coeffs.items() if c != 0]
    if total != 0 or not out:
        out.append(Const.raw(total))
    return out[0] if len(out) == 1 else Add.raw(out)


def _base_exp(f: Expr) -> tuple[Expr, int]:
    if isinstance(f, Pow):
        return f.base, f.exponent
    return f, 1


def mul(*factors: Expr) -> Expr:
    coeff = Fraction(1)
    powers: dict[Expr, int] = {}
    stack = list(reversed(factors))
    while stack:
        f = stack.pop()
        if isinstance(f, Const):
            coeff *= f.value
            if coeff == 0:
                return ZERO
        elif isinstance(f, Neg):
            coeff = -coeff
            stack.append(f.arg)
        elif isinstance(f, Mul):
            stack.extend(reversed(f.factors))
        else:
            b, n = _base_exp(f)
            powers[b] = powers.get(b, 0) + n
    out = [power(b, n) for b, n in powers.items() if n != 0]
    out = [o for o in out if not is_const(o, 1)]
    if not out:
        return Const.raw(coeff)
    rest = out[0] if len(out) == 1 else Mul.raw(out)
    return _scaled(coeff, rest)


def neg(e: Expr) -> Expr:
    if isinstance(e, Const):
        return Const.raw(-e.value)
    if isinstance(e, Neg):
        return e.arg
    if isinstance(e, Add):
        return add(*(neg(t) for t in e.terms))
    return mul(Const.raw(-1), e)


def div(num: Expr, den: Expr) -> Expr:
    if isinstance(den, Const):
        if den.value == 0:
            raise ZeroDivisionError("division by the constant 0")
        return mul(Const.raw(1 / den.value), num)
    if is_const(num, 0):
        return ZERO
    if num is den:
        return ONE
    # quotients become negative powers so that repeated factors cancel
    return mul(num, power(den, -1))


def power(base: Expr, n: int) -> Expr:
    if n == 0:
        return ONE
    if n == 1:
        return base
    if isinstance(base, Const):
        if base.value == 0 and n < 0:
            raise ZeroDivisionError("0 raised to a negative power")
        return Const.raw(base.value ** n)
    if isinstance(base, Pow):
        return power(base.base, base.exponent * n)
    if isinstance(base, Neg):
        p = power(base.arg, n)
        return p if n % 2 == 0 else neg(p)
    return Pow.raw(base, n)


def exp(arg: Expr) -> Expr:
    if is_const(arg, 0):
        return ONE
    return Exp.raw(arg)


def rebuild(e: Expr, memo: dict | None = None) -> Expr:
    """Reconstruct a tree bottom-up through the smart constructors."""
    memo = {} if memo is None else memo
    order = postorder([e])
    for n in order:
        if n in memo:
            continue
        if isinstance(n, (Const, Var)):
            memo[n] = n
        elif isinstance(n, Neg):
            memo[n] = neg(memo[n.arg])
        elif isinstance(n, Add):
            memo[n] = add(*(memo[t] for t in n.terms))
        elif isinstance(n, Mul):
            memo[n] = mul(*(memo[f] for f in n.factors))
        elif isinstance(n, Div):
            memo[n] = div(memo[n.num], memo[n.den])
        elif isinstance(n, Pow):
            memo[n] = power(memo[n.base], n.exponent)
        elif isinstance(n, Exp):
            memo[n] = exp(memo[n.arg])
    return memo[e]


def postorder(roots: Iterable[Expr]) -> list[Expr]:
    """Distinct nodes reachable from roots, children before parents."""
    seen: set[int] = set()
    out: list[Expr] = []
    for root in roots:
        if id(root) in seen:
            continue
        stack: list[tuple[Expr, bool]] = [(root, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                out.append(node)
                continue
            if id(node) in seen:
                continue
            seen.add(id(node))
            stack.append((node, True))
            for c in reversed(node.children()):
                if id(c) not in seen:
                    stack.append((c, False))
    return out


def node_count(e: Expr) -> int:
    return len(postorder([e]))
