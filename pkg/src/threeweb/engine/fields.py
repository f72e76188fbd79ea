"""Symbolic field trees of a web.

Only the quantities whose derivatives are needed are kept symbolic:
Γ and its first partials (curvature), a and its partials (p_ij, q_ij), and
p_ij, q_ij with their partials (the second-order Pfaffian derivatives and
the covariant derivatives of p_ij, q_ij). Everything else is assembled
numerically from these at the sample points.

Array index convention throughout: Γ[i, j, k] is Γⁱⱼₖ with 0-based indices,
ḡ[l, j] is ḡˡⱼ, b[i, j, k, l] is bⁱⱼₖₗ.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import cached_property

from ..expr import (
    COORDINATES,
    Expr,
    Program,
    add,
    differentiate,
    mul,
    neg,
    power,
    simplify,
)
from .web import WebDefinition

X = ("x1", "x2")
Y = ("y1", "y2")
R2 = range(2)


def _inverse(m: list[list[Expr]], det: Expr) -> list[list[Expr]]:
    inv = power(det, -1)
    return [
        [mul(m[1][1], inv), neg(mul(m[0][1], inv))],
        [neg(mul(m[1][0], inv)), mul(m[0][0], inv)],
    ]


def _grad2(e: Expr, names: tuple[str, str]) -> list[Expr]:
    return [differentiate(e, v) for v in names]


@dataclass
class WebFields:
    f1: Expr
    f2: Expr

    def __post_init__(self):
        self._lock = threading.Lock()
        self.f = [simplify(self.f1), simplify(self.f2)]

    # -- first jets ----------------------------------------------------------
    @cached_property
    def f_bar(self) -> list[list[Expr]]:
        return [[differentiate(self.f[i], X[j]) for j in R2] for i in R2]

    @cached_property
    def f_tilde(self) -> list[list[Expr]]:
        return [[differentiate(self.f[i], Y[j]) for j in R2] for i in R2]

    @cached_property
    def det_bar(self) -> Expr:
        m = self.f_bar
        return add(mul(m[0][0], m[1][1]), neg(mul(m[0][1], m[1][0])))

    @cached_property
    def det_tilde(self) -> Expr:
        m = self.f_tilde
        return add(mul(m[0][0], m[1][1]), neg(mul(m[0][1], m[1][0])))

    @cached_property
    def g_bar(self) -> list[list[Expr]]:
        return _inverse(self.f_bar, self.det_bar)

    @cached_property
    def g_tilde(self) -> list[list[Expr]]:
        return _inverse(self.f_tilde, self.det_tilde)

    # -- connection ----------------------------------------------------------
    @cached_property
    def gamma(self) -> list[list[list[Expr]]]:
        """Γⁱⱼₖ = −∂²fⁱ/∂xˡ∂yᵐ ḡˡⱼ g̃ᵐₖ."""
        fxy = [
            [[differentiate(self.f_bar[i][l], Y[m]) for m in R2] for l in R2]
            for i in R2
        ]
        gb, gt = self.g_bar, self.g_tilde
        return [
            [
                [
                    neg(add(*(
                        mul(fxy[i][l][m], gb[l][j], gt[m][k])
                        for l in R2 for m in R2
                    )))
                    for k in R2
                ]
                for j in R2
            ]
            for i in R2
        ]

    @cached_property
    def a(self) -> list[Expr]:
        """Torsion covector: a₁ = Γ²₁₂ − Γ²₂₁, a₂ = Γ¹₂₁ − Γ¹₁₂."""
        g = self.gamma
        return [
            add(g[1][0][1], neg(g[1][1][0])),
            add(g[0][1][0], neg(g[0][0][1])),
        ]

    @cached_property
    def d_gamma(self) -> list:
        """d_gamma[c][i][j][k] = ∂Γⁱⱼₖ/∂zᶜ, z = (x1, x2, y1, y2)."""
        return [
            [[[differentiate(self.gamma[i][j][k], c) for k in R2] for j in R2] for i in R2]
            for c in COORDINATES
        ]

    @cached_property
    def d_a(self) -> list[list[Expr]]:
        return [[differentiate(self.a[i], c) for c in COORDINATES] for i in R2]

    # -- Pfaffian derivatives of a -------------------------------------------
    @cached_property
    def p_ij(self) -> list[list[Expr]]:
        """pᵢⱼ = ∂aᵢ/∂xˡ ḡˡⱼ − aₘΓᵐⱼᵢ."""
        gb, g, a, da = self.g_bar, self.gamma, self.a, self.d_a
        return [
            [
                add(
                    *(mul(da[i][l], gb[l][j]) for l in R2),
                    *(neg(mul(a[m], g[m][j][i])) for m in R2),
                )
                for j in R2
            ]
            for i in R2
        ]

    @cached_property
    def q_ij(self) -> list[list[Expr]]:
        """qᵢⱼ = ∂aᵢ/∂yˡ g̃ˡⱼ − aₘΓᵐᵢⱼ."""
        gt, g, a, da = self.g_tilde, self.gamma, self.a, self.d_a
        return [
            [
                add(
                    *(mul(da[i][2 + l], gt[l][j]) for l in R2),
                    *(neg(mul(a[m], g[m][i][j])) for m in R2),
                )
                for j in R2
            ]
            for i in R2
        ]

    @cached_property
    def d_p_ij(self) -> list:
        """d_p_ij[c][i][j] = ∂pᵢⱼ/∂zᶜ."""
        return [[[differentiate(self.p_ij[i][j], c) for j in R2] for i in R2] for c in COORDINATES]

    @cached_property
    def d_q_ij(self) -> list:
        return [[[differentiate(self.q_ij[i][j], c) for j in R2] for i in R2] for c in COORDINATES]

    # -- evaluation program --------------------------------------------------
    def roots(self, level: int) -> list[Expr]:
        """Flat root list for a derivative level.

        level 1: Jacobians and Γ; 2: adds a, ∂Γ, ∂a; 3: adds p_ij, q_ij and
        their partials.
        """
        out: list[Expr] = []
        for m in (self.f_bar, self.f_tilde):
            out += [m[i][j] for i in R2 for j in R2]
        out += [self.det_bar, self.det_tilde]
        out += [self.gamma[i][j][k] for i in R2 for j in R2 for k in R2]
        if level >= 2:
            out += self.a
            out += [self.d_gamma[c][i][j][k] for c in range(4) for i in R2 for j in R2 for k in R2]
            out += [self.d_a[i][c] for i in R2 for c in range(4)]
        if level >= 3:
            for t, dt in ((self.p_ij, self.d_p_ij), (self.q_ij, self.d_q_ij)):
                out += [t[i][j] for i in R2 for j in R2]
                out += [dt[c][i][j] for c in range(4) for i in R2 for j in R2]
        return out

    def program(self, level: int) -> Program:
        with self._lock:
            cache = self.__dict__.setdefault("_programs", {})
            if level not in cache:
                cache[level] = Program(self.roots(level))
            return cache[level]


_cache_lock = threading.Lock()
_cache: dict[tuple[int, int], tuple[Expr, Expr, WebFields]] = {}


def fields_for(web: WebDefinition) -> WebFields:
    """Shared symbolic fields for a web (keyed on the interned f¹, f² trees)."""
    key = (id(web.f1), id(web.f2))
    with _cache_lock:
        hit = _cache.get(key)
        if hit is not None and hit[0] is web.f1 and hit[1] is web.f2:
            return hit[2]
        wf = WebFields(web.f1, web.f2)
        _cache[key] = (web.f1, web.f2, wf)
        return wf
