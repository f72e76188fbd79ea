"""Registry of tensor identities, each reduced to zero-tests on sums of terms.

An identity maps a FrameBatch to a list of components; a component is a
list of term arrays (one value per sample) whose sum should vanish. The
normalized residual of a component is |Σ terms| / (1 + Σ |terms|), and the
residual of the identity at a sample is the maximum over its components.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable

import numpy as np

from ..engine import FrameBatch, WebDefinition, fields_for
from ..expr import COORDINATES, Program, differentiate

Component = list  # list of np.ndarray terms, each of shape (n,)
R2 = range(2)


class UnknownIdentity(KeyError):
    pass


@dataclass
class Context:
    web: WebDefinition
    batch: FrameBatch


@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    build: Callable[[Context], list[Component]]


REGISTRY: dict[str, Identity] = {}
ALIASES: dict[str, str] = {}


def register(identity_id: str, description: str, *aliases: str):
    def deco(fn):
        REGISTRY[identity_id] = Identity(identity_id, description, fn)
        for a in aliases:
            ALIASES[a] = identity_id
        return fn

    return deco


def lookup(identity_id: str) -> Identity:
    key = ALIASES.get(identity_id, identity_id)
    try:
        return REGISTRY[key]
    except KeyError:
        raise UnknownIdentity(identity_id) from None


def residuals(components: list[Component]) -> np.ndarray:
    """Per-sample normalized residual (max over components)."""
    out = None
    for terms in components:
        total = sum(terms)
        scale = 1 + sum(np.abs(t) for t in terms)
        r = np.abs(total) / scale
        out = r if out is None else np.maximum(out, r)
    return np.asarray(out, dtype=float)


def _zero(*arrays) -> list[Component]:
    return [[a] for a in arrays]


def _diff(x, y) -> Component:
    return [x, -y]


def _sum(x, y) -> Component:
    return [x, y]


def _sym3(b: np.ndarray) -> np.ndarray:
    """Average over the 6 permutations of the three lower indices of b[n, i, j, k, l]."""
    return sum(b.transpose((0, 1) + tuple(2 + p for p in perm)) for perm in permutations(range(3))) / 6


# -- first-level component tests ---------------------------------------------

@register("a1=0", "a₁ vanishes", "(10)")
def _a1(c: Context):
    return _zero(c.batch.a[:, 0])


@register("a2=0", "a₂ vanishes", "(9)")
def _a2(c: Context):
    return _zero(c.batch.a[:, 1])


@register("a=0", "the torsion covector vanishes (isoclinicly geodesic)")
def _a(c: Context):
    return _zero(c.batch.a[:, 0], c.batch.a[:, 1])


@register("a1=a2", "a₁ = a₂", "(11)")
def _a1_eq_a2(c: Context):
    return [_diff(c.batch.a[:, 0], c.batch.a[:, 1])]


@register("a1=-a2", "a₁ = −a₂", "(12)")
def _a1_eq_ma2(c: Context):
    return [_sum(c.batch.a[:, 0], c.batch.a[:, 1])]


@register("p=0", "p vanishes")
def _p0(c: Context):
    return _zero(c.batch.p)


@register("q=0", "q vanishes")
def _q0(c: Context):
    return _zero(c.batch.q)


@register("p=q", "p = q")
def _peq(c: Context):
    return [_diff(c.batch.p, c.batch.q)]


@register("(37)", "p and q both vanish (isoclinic); FAILS means (37) p²+q²>0 holds somewhere")
def _iso(c: Context):
    return _zero(c.batch.p, c.batch.q)


for _name in ("p", "q"):
    for _i in R2:
        for _j in R2:
            def _make(name=_name, i=_i, j=_j):
                @register(f"{name}_{i + 1}{j + 1}=0", f"{name}_{i + 1}{j + 1} vanishes")
                def _f(c: Context):
                    return _zero(getattr(c.batch, f"{name}_ij")[:, i, j])

            _make()


# -- transversal distribution ------------------------------------------------

def _dehomogenize(components: list[Component], a: np.ndarray, degree: int) -> list[Component]:
    """Divide an identity homogeneous of the given degree in a by max(1, |a|)^degree.

    Same zero set, but roundoff in a vanishing tensor is no longer amplified by
    large torsion near the domain boundary.
    """
    s = np.maximum(1.0, np.abs(a).max(axis=1)) ** degree
    return [[t / s for t in terms] for terms in components]


def _eq8(T, a1, a2):
    return [a2**2 * T[:, 0, 0], -2 * a1 * a2 * 0.5 * (T[:, 0, 1] + T[:, 1, 0]), a1**2 * T[:, 1, 1]]


@register("(8)-p-part", "a₂²p₁₁ − 2a₁a₂p₍₁₂₎ + a₁²p₂₂ = 0")
def _e8p(c: Context):
    a = c.batch.a
    return _dehomogenize([_eq8(c.batch.p_ij, a[:, 0], a[:, 1])], a, 2)


@register("(8)-q-part", "a₂²q₁₁ − 2a₁a₂q₍₁₂₎ + a₁²q₂₂ = 0")
def _e8q(c: Context):
    a = c.batch.a
    return _dehomogenize([_eq8(c.batch.q_ij, a[:, 0], a[:, 1])], a, 2)


@register("(8)", "integrability of the transversal a-distribution")
def _e8(c: Context):
    return _e8p(c) + _e8q(c)


@register("(13)", "p₂₂ = q₂₂ = 0")
def _e13(c: Context):
    return _zero(c.batch.p_ij[:, 1, 1], c.batch.q_ij[:, 1, 1])


@register("(14)", "p₁₁ = q₁₁ = 0")
def _e14(c: Context):
    return _zero(c.batch.p_ij[:, 0, 0], c.batch.q_ij[:, 0, 0])


def _e15_16(T, sign):
    return [T[:, 0, 0], sign * (T[:, 0, 1] + T[:, 1, 0]), T[:, 1, 1]]


@register("(15)", "p₁₁ − 2p₍₁₂₎ + p₂₂ = 0 and the same for q")
def _e15(c: Context):
    return [_e15_16(c.batch.p_ij, -1), _e15_16(c.batch.q_ij, -1)]


@register("(16)", "p₁₁ + 2p₍₁₂₎ + p₂₂ = 0 and the same for q")
def _e16(c: Context):
    return [_e15_16(c.batch.p_ij, 1), _e15_16(c.batch.q_ij, 1)]


@register("(17)", "integral surfaces of Δ geodesicly parallel")
def _e17(c: Context):
    a1, a2 = c.batch.a[:, 0], c.batch.a[:, 1]
    out = []
    for T in (c.batch.p_ij, c.batch.q_ij):
        out.append([a2 * T[:, 0, 1], -a1 * T[:, 1, 1]])
        out.append([a1 * T[:, 1, 0], -a2 * T[:, 0, 0]])
    return _dehomogenize(out, c.batch.a, 1)


@register("(20)", "p₂ᵢ = q₂ᵢ = 0")
def _e20(c: Context):
    P, Q = c.batch.p_ij, c.batch.q_ij
    return _zero(P[:, 1, 0], P[:, 1, 1], Q[:, 1, 0], Q[:, 1, 1])


@register("(21)", "p₁ᵢ = q₁ᵢ = 0")
def _e21(c: Context):
    P, Q = c.batch.p_ij, c.batch.q_ij
    return _zero(P[:, 0, 0], P[:, 0, 1], Q[:, 0, 0], Q[:, 0, 1])


@register("(22)", "p₁ᵢ = p₂ᵢ, q₁ᵢ = q₂ᵢ")
def _e22(c: Context):
    P, Q = c.batch.p_ij, c.batch.q_ij
    return [_diff(T[:, 0, i], T[:, 1, i]) for T in (P, Q) for i in R2]


@register("(23)", "p₁ᵢ = −p₂ᵢ, q₁ᵢ = −q₂ᵢ")
def _e23(c: Context):
    P, Q = c.batch.p_ij, c.batch.q_ij
    return [_sum(T[:, 0, i], T[:, 1, i]) for T in (P, Q) for i in R2]


def _bsym(c: Context):
    S = _sym3(c.batch.b)
    return S[:, :, 0, 0, 1], S[:, :, 0, 1, 1]  # b^i_(112), b^i_(122)


@register("(24)", "webs W(3,2,1) cut on the integral surfaces are hexagonal")
def _e24(c: Context):
    b = c.batch.b
    a1, a2 = c.batch.a[:, 0], c.batch.a[:, 1]
    s112, s122 = _bsym(c)
    return _dehomogenize([
        [-b[:, i, 0, 0, 0] * a2**3, 3 * s112[:, i] * a2**2 * a1,
         -3 * s122[:, i] * a2 * a1**2, b[:, i, 1, 1, 1] * a1**3]
        for i in R2
    ], c.batch.a, 3)


@register("(25)", "b¹₂₂₂ = b²₂₂₂ = 0")
def _e25(c: Context):
    return _zero(c.batch.b[:, 0, 1, 1, 1], c.batch.b[:, 1, 1, 1, 1])


@register("(26)", "b¹₁₁₁ = b²₁₁₁ = 0")
def _e26(c: Context):
    return _zero(c.batch.b[:, 0, 0, 0, 0], c.batch.b[:, 1, 0, 0, 0])


@register("(27)", "−bⁱ₁₁₁ + 3(bⁱ₍₁₁₂₎ − bⁱ₍₁₂₂₎) + bⁱ₂₂₂ = 0")
def _e27(c: Context):
    b = c.batch.b
    s112, s122 = _bsym(c)
    return [[-b[:, i, 0, 0, 0], 3 * s112[:, i], -3 * s122[:, i], b[:, i, 1, 1, 1]] for i in R2]


@register("(28)", "bⁱ₁₁₁ + 3(bⁱ₍₁₁₂₎ + bⁱ₍₁₂₂₎) + bⁱ₂₂₂ = 0")
def _e28(c: Context):
    b = c.batch.b
    s112, s122 = _bsym(c)
    return [[b[:, i, 0, 0, 0], 3 * s112[:, i], 3 * s122[:, i], b[:, i, 1, 1, 1]] for i in R2]


# -- structure identities ------------------------------------------------------

@register("(33)a", "bⁱ[j|l|k] = δⁱ[k pⱼ]l")
def _e33a(c: Context):
    b, P = c.batch.b, c.batch.p_ij
    d = np.eye(2)
    out = []
    for i in R2:
        for j in R2:
            for k in R2:
                for l in R2:
                    out.append([
                        0.5 * b[:, i, j, l, k], -0.5 * b[:, i, k, l, j],
                        -0.5 * d[i, k] * P[:, j, l], 0.5 * d[i, j] * P[:, k, l],
                    ])
    return out


@register("(33)b", "bⁱ[jk]l = δⁱ[k qⱼ]l")
def _e33b(c: Context):
    b, Q = c.batch.b, c.batch.q_ij
    d = np.eye(2)
    out = []
    for i in R2:
        for j in R2:
            for k in R2:
                for l in R2:
                    out.append([
                        0.5 * b[:, i, j, k, l], -0.5 * b[:, i, k, j, l],
                        -0.5 * d[i, k] * Q[:, j, l], 0.5 * d[i, j] * Q[:, k, l],
                    ])
    return out


@register("(35)a", "p⁽¹⁾i[jk] + pi[j ak] = 0")
def _e35a(c: Context):
    T, P, a = c.batch.p1_ijk, c.batch.p_ij, c.batch.a
    return [
        [0.5 * T[:, i, j, k], -0.5 * T[:, i, k, j], 0.5 * P[:, i, j] * a[:, k], -0.5 * P[:, i, k] * a[:, j]]
        for i in R2 for j in R2 for k in R2
    ]


@register("(35)b", "q⁽²⁾i[jk] − qi[j ak] = 0")
def _e35b(c: Context):
    T, Q, a = c.batch.q2_ijk, c.batch.q_ij, c.batch.a
    return [
        [0.5 * T[:, i, j, k], -0.5 * T[:, i, k, j], -0.5 * Q[:, i, j] * a[:, k], 0.5 * Q[:, i, k] * a[:, j]]
        for i in R2 for j in R2 for k in R2
    ]


def _e35c_with(c: Context, other: np.ndarray, sign: int = 1):
    T, b, a = c.batch.p2_ijk, c.batch.b, c.batch.a
    ab = sign * np.einsum("nm,nmijk->nijk", a, b)
    return [[T[:, i, j, k], -other[:, i, j, k], ab[:, i, j, k]] for i in R2 for j in R2 for k in R2]


@register("(35)c", "p⁽²⁾ijk − q⁽²⁾ijk + a_m bᵐijk = 0, as printed")
def _e35c(c: Context):
    return _e35c_with(c, c.batch.q2_ijk)


@register("(35)c-q1", "p⁽²⁾ijk − q⁽¹⁾ijk + a_m bᵐijk = 0, mixed variant")
def _e35c_q1(c: Context):
    return _e35c_with(c, c.batch.q1_ijk)


@register("(35)c-resolved", "p⁽²⁾ijk − q⁽¹⁾ikj − a_m bᵐijk = 0, the form that holds on the corpus")
def _e35c_resolved(c: Context):
    return _e35c_with(c, c.batch.q1_ijk.transpose(0, 1, 3, 2), sign=-1)


@register("torsion-(6)", "aⁱjk = ½(aj δⁱk − ak δⁱj)")
def _torsion6(c: Context):
    A, a = c.batch.a_jk_i, c.batch.a
    d = np.eye(2)
    return [
        [A[:, i, j, k], -0.5 * a[:, j] * d[i, k], 0.5 * a[:, k] * d[i, j]]
        for i in R2 for j in R2 for k in R2
    ]


def _second_jet(c: Context) -> np.ndarray:
    """∂²fⁱ/∂zᵘ∂zᵛ at the samples, shape (n, 2, 4, 4), from separate trees."""
    wf = fields_for(c.web)
    roots = [differentiate(differentiate(f, u), v) for f in wf.f for u in COORDINATES for v in COORDINATES]
    vals, _ = Program(roots).run(c.batch.points)
    return np.stack(vals, axis=1).reshape(-1, 2, 4, 4)


def _first_jet(c: Context) -> np.ndarray:
    wf = fields_for(c.web)
    roots = [differentiate(f, u) for f in wf.f for u in COORDINATES]
    vals, _ = Program(roots).run(c.batch.points)
    return np.stack(vals, axis=1).reshape(-1, 2, 4)


@register("(29)", "−ω₃ⁱ = ω₁ⁱ + ω₂ⁱ over the coordinate cobasis")
def _e29(c: Context):
    du = _first_jet(c)
    w = np.concatenate([c.batch.f_bar, c.batch.f_tilde], axis=2)
    return [_diff(du[:, i, u], w[:, i, u]) for i in R2 for u in range(4)]


@register("(47)", "dω₁ⁱ = −dω₂ⁱ = Γⁱjk ω₁ʲ∧ω₂ᵏ")
def _e47(c: Context):
    H = _second_jet(c)
    fb, ft, G = c.batch.f_bar, c.batch.f_tilde, c.batch.gamma
    # Γⁱjk ω₁ʲ∧ω₂ᵏ on dxˢ∧dyᵗ
    rhs = np.einsum("nijk,njs,nkt->nist", G, fb, ft)
    out = []
    for i in R2:
        # ω₁ⁱ = ∂ₓⱼfⁱ dxʲ, so dω₁ⁱ = Σ ∂_u∂ₓⱼfⁱ du∧dxʲ
        for s in R2:
            for t in R2:
                out.append([-H[:, i, s, 2 + t], -rhs[:, i, s, t]])  # dω₁ on dxˢ∧dyᵗ
                out.append([H[:, i, 2 + t, s], rhs[:, i, s, t]])  # dω₂ on dxˢ∧dyᵗ
        # pure dx∧dx and dy∧dy parts must vanish
        out.append([H[:, i, 0, 1], -H[:, i, 1, 0]])
        out.append([H[:, i, 2, 3], -H[:, i, 3, 2]])
    return out


# -- curvature classes -----------------------------------------------------------

@register("(38)", "bⁱ(jkl) = δⁱ(j bkl) with bkl = ¾ bᵐ(mkl)")
def _e38(c: Context):
    S = _sym3(c.batch.b)
    bkl = 0.75 * np.einsum("nmmkl->nkl", S)
    d = np.eye(2)
    out = []
    for i in R2:
        for j in R2:
            for k in R2:
                for l in R2:
                    out.append([
                        S[:, i, j, k, l],
                        -d[i, j] * bkl[:, k, l] / 3,
                        -d[i, k] * bkl[:, j, l] / 3,
                        -d[i, l] * bkl[:, j, k] / 3,
                    ])
    return out


@register("(39)", "bⁱ(jkl) = 0 (hexagonal)")
def _e39(c: Context):
    S = _sym3(c.batch.b)
    return _zero(*(S[:, i, j, k, l] for i in R2 for j in R2 for k in R2 for l in R2))


@register("(40)", "bⁱj(kl) = 0 (Bol)")
def _e40(c: Context):
    b = c.batch.b
    return [[0.5 * b[:, i, j, k, l], 0.5 * b[:, i, j, l, k]] for i in R2 for j in R2 for k in R2 for l in R2]


@register("(41)", "bⁱjkl = 0 (group web)", "(41) b=0")
def _e41(c: Context):
    b = c.batch.b
    return _zero(*(b[:, i, j, k, l] for i in R2 for j in R2 for k in R2 for l in R2))


@register("(42)", "p·q·(p − q) vanishes; FAILS means p ≠ 0, q ≠ 0, p ≠ q generically")
def _e42(c: Context):
    p, q = c.batch.p, c.batch.q
    return _zero(p * q * (p - q))


@register("(43)", "q(q p⁽¹⁾ᵢ − p q⁽¹⁾ᵢ) − p(q p⁽²⁾ᵢ − p q⁽²⁾ᵢ) = pq(p − q)aᵢ")
def _e43(c: Context):
    B = c.batch
    p, q = B.p, B.q
    return [
        [q * q * B.p1_i[:, i], -q * p * B.q1_i[:, i], -p * q * B.p2_i[:, i], p * p * B.q2_i[:, i],
         -p * q * p * B.a[:, i], p * q * q * B.a[:, i]]
        for i in R2
    ]


# -- class E component conjunctions -----------------------------------------------

def _pq(c: Context):
    return c.batch.p_ij, c.batch.q_ij


@register("E11", "p_i2 = q_i1 = 0")
def _E11(c):
    P, Q = _pq(c)
    return _zero(P[:, 0, 1], P[:, 1, 1], Q[:, 0, 0], Q[:, 1, 0])


@register("E111", "p₂₁ = −q₁₂")
def _E111(c):
    P, Q = _pq(c)
    return [_sum(P[:, 1, 0], Q[:, 0, 1])]


@register("E12", "p₁₂ = p₂₁, q₁₁ = q₂₂, q₁₂ = −q₂₁")
def _E12(c):
    P, Q = _pq(c)
    return [_diff(P[:, 0, 1], P[:, 1, 0]), _diff(Q[:, 0, 0], Q[:, 1, 1]), _sum(Q[:, 0, 1], Q[:, 1, 0])]


@register("E13", "p₁₁ = p₂₂ = 0")
def _E13(c):
    P, _ = _pq(c)
    return _zero(P[:, 0, 0], P[:, 1, 1])


@register("E131", "p₁₂ = q₁₂, p₂₁ = q₂₁")
def _E131(c):
    P, Q = _pq(c)
    return [_diff(P[:, 0, 1], Q[:, 0, 1]), _diff(P[:, 1, 0], Q[:, 1, 0])]


@register("E2", "p₂ᵢ = q₂ᵢ = 0")
def _E2(c):
    return _e20(c)


@register("E21", "q₁₂ = 0")
def _E21(c):
    return _zero(c.batch.q_ij[:, 0, 1])


@register("E22", "p₁ᵢ = 0")
def _E22(c):
    P, _ = _pq(c)
    return _zero(P[:, 0, 0], P[:, 0, 1])


@register("E23", "p₁₂ = q₁₂")
def _E23(c):
    P, Q = _pq(c)
    return [_diff(P[:, 0, 1], Q[:, 0, 1])]


@register("E3", "p₁ᵢ = q₁ᵢ = 0")
def _E3(c):
    return _e21(c)


@register("E31", "q₂ⱼ = 0")
def _E31(c):
    Q = c.batch.q_ij
    return _zero(Q[:, 1, 0], Q[:, 1, 1])


@register("E32", "p₂₁ = q₂₁")
def _E32(c):
    P, Q = _pq(c)
    return [_diff(P[:, 1, 0], Q[:, 1, 0])]


@register("E321", "p₂₂ = 0")
def _E321(c):
    return _zero(c.batch.p_ij[:, 1, 1])


@register("E33", "p₂₁ = −q₂₁")
def _E33(c):
    P, Q = _pq(c)
    return [_sum(P[:, 1, 0], Q[:, 1, 0])]


# corroborating shortcuts for the C/D decision (never decisive on their own)
@register("bjjj-offdiag=0", "bⁱjjj = 0 for i ≠ j")
def _cor_a(c: Context):
    b = c.batch.b
    return _zero(b[:, 0, 1, 1, 1], b[:, 1, 0, 0, 0])


@register("b1=0", "b¹jkl = 0")
def _cor_b1(c: Context):
    b = c.batch.b
    return _zero(*(b[:, 0, j, k, l] for j in R2 for k in R2 for l in R2))


@register("b2=0", "b²jkl = 0")
def _cor_b2(c: Context):
    b = c.batch.b
    return _zero(*(b[:, 1, j, k, l] for j in R2 for k in R2 for l in R2))


def registered_ids() -> list[str]:
    return list(REGISTRY)
