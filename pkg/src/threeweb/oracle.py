"""Finite-difference reference implementation of the web invariants.

Shares no code with the symbolic engine: f is compiled straight from its
source text into an mpmath function, partials of f come from
``mpmath.diff``, derived fields are differentiated by central differences
at high working precision, and the curvature is read off the structure
equation dωⱼⁱ − ωⱼᵏ∧ωₖⁱ = bⁱⱼₖₗ ω₁ᵏ∧ω₂ˡ instead of the closed formula.
"""

from __future__ import annotations

import re
from typing import Callable

import mpmath
import numpy as np

_ALLOWED = re.compile(r"^[\sxy12exp0-9.+\-*/^()eE]*$")
_NUMBER = re.compile(r"(?<![A-Za-z_0-9.])(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")

DPS = 60
H_FIELD = mpmath.mpf("1e-15")  # step for first derivatives of Γ, a
H_NESTED = mpmath.mpf("1e-9")  # step for derivatives of p_ij, q_ij


def compile_function(text: str) -> Callable:
    """Turn DSL text into f(x1, x2, y1, y2) over mpmath numbers."""
    if not _ALLOWED.match(text):
        raise ValueError(f"unsupported characters in {text!r}")
    py = _NUMBER.sub(lambda m: f"mpf('{m.group(0)}')", text).replace("^", "**")
    code = compile(py, "<web>", "eval")
    env = {"mpf": mpmath.mpf, "exp": mpmath.exp, "__builtins__": {}}

    def f(x1, x2, y1, y2):
        return eval(code, env, {"x1": x1, "x2": x2, "y1": y1, "y2": y2})

    return f


def _inv(m):
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    return [[m[1][1] / det, -m[0][1] / det], [-m[1][0] / det, m[0][0] / det]]


def _zeros(*shape):
    arr = np.empty(shape, dtype=object)
    arr.fill(mpmath.mpf(0))
    return arr


class FDOracle:
    def __init__(self, f1_text: str, f2_text: str, dps: int = DPS):
        self.f = (compile_function(f1_text), compile_function(f2_text))
        self.dps = dps

    # -- first level: Jacobians and Γ -------------------------------------
    def frame(self, z):
        """(f̄, f̃, ḡ, g̃, Γ) at z, all as nested mp arrays."""
        z = [mpmath.mpf(v) for v in z]
        fb = [[mpmath.diff(f, z, tuple(int(c == j) for c in range(4))) for j in range(2)] for f in self.f]
        ft = [[mpmath.diff(f, z, tuple(int(c == j + 2) for c in range(4))) for j in range(2)] for f in self.f]
        fxy = [
            [[mpmath.diff(f, z, tuple(int(c == l) + int(c == m + 2) for c in range(4))) for m in range(2)]
             for l in range(2)]
            for f in self.f
        ]
        gb, gt = _inv(fb), _inv(ft)
        G = _zeros(2, 2, 2)
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    G[i, j, k] = -mpmath.fsum(
                        fxy[i][l][m] * gb[l][j] * gt[m][k] for l in range(2) for m in range(2)
                    )
        return fb, ft, gb, gt, G

    @staticmethod
    def _a(G):
        return np.array([G[1, 0, 1] - G[1, 1, 0], G[0, 1, 0] - G[0, 0, 1]], dtype=object)

    @staticmethod
    def _conn_coords(fb, ft, G):
        """Coordinate coefficients C[i, j, u] of ωⱼⁱ = Γⁱₖⱼω₁ᵏ + Γⁱⱼₖω₂ᵏ over dz^u."""
        C = _zeros(2, 2, 4)
        for i in range(2):
            for j in range(2):
                for s in range(2):
                    C[i, j, s] = mpmath.fsum(G[i, k, j] * fb[k][s] for k in range(2))
                    C[i, j, 2 + s] = mpmath.fsum(G[i, j, k] * ft[k][s] for k in range(2))
        return C

    def _central(self, func, z, h):
        """Central differences of an array-valued func along the four coordinates."""
        out = []
        for c in range(4):
            zp = list(z)
            zm = list(z)
            zp[c] += h
            zm[c] -= h
            out.append((func(zp) - func(zm)) / (2 * h))
        return out

    # -- public API --------------------------------------------------------
    def invariants(self, z, *, covariant: bool = False) -> dict[str, np.ndarray]:
        with mpmath.workdps(self.dps):
            z = [mpmath.mpf(v) for v in z]
            fb, ft, gb, gt, G = self.frame(z)
            a = self._a(G)

            def fields(w):
                fb_, ft_, _, _, G_ = self.frame(w)
                return np.concatenate([self._a(G_), self._conn_coords(fb_, ft_, G_).ravel()])

            d = self._central(fields, z, H_FIELD)
            da = [dc[:2] for dc in d]
            dC = [dc[2:].reshape(2, 2, 4) for dc in d]
            C = self._conn_coords(fb, ft, G)
            b = self._curvature(C, dC, gb, gt)
            P, Q = self._pq(a, da, G, gb, gt)
            out = {
                "f_bar": fb, "f_tilde": ft, "gamma": G, "a": a, "b": b, "p_ij": P, "q_ij": Q,
                "p": (P[0, 1] - P[1, 0]) / 2, "q": (Q[0, 1] - Q[1, 0]) / 2,
            }
            if covariant:
                out.update(self._covariant(z, P, Q, G, gb, gt))
            return {k: np.array(v, dtype=float) for k, v in out.items()}

    @staticmethod
    def _pq(a, da, G, gb, gt):
        P = _zeros(2, 2)
        Q = _zeros(2, 2)
        for i in range(2):
            for j in range(2):
                P[i, j] = (
                    mpmath.fsum(da[l][i] * gb[l][j] for l in range(2))
                    - mpmath.fsum(a[m] * G[m, j, i] for m in range(2))
                )
                Q[i, j] = (
                    mpmath.fsum(da[2 + l][i] * gt[l][j] for l in range(2))
                    - mpmath.fsum(a[m] * G[m, i, j] for m in range(2))
                )
        return P, Q

    @staticmethod
    def _curvature(C, dC, gb, gt):
        # dω coefficient on dx^s∧dy^t is ∂_{x^s}C_{y^t} − ∂_{y^t}C_{x^s}
        b = _zeros(2, 2, 2, 2)
        for i in range(2):
            for j in range(2):
                M = [[dC[s][i, j, 2 + t] - dC[2 + t][i, j, s] for t in range(2)] for s in range(2)]
                for k in range(2):
                    for l in range(2):
                        d_part = mpmath.fsum(
                            M[s][t] * gb[s][k] * gt[t][l] for s in range(2) for t in range(2)
                        )
                        # ωⱼᵐ∧ωₘⁱ along ω₁ᵏ∧ω₂ˡ, frame coefficients recovered from C
                        w_part = 0
                        for m in range(2):
                            A_jm_k = mpmath.fsum(C[m, j, s] * gb[s][k] for s in range(2))
                            B_mi_l = mpmath.fsum(C[i, m, 2 + t] * gt[t][l] for t in range(2))
                            A_mi_k = mpmath.fsum(C[i, m, s] * gb[s][k] for s in range(2))
                            B_jm_l = mpmath.fsum(C[m, j, 2 + t] * gt[t][l] for t in range(2))
                            w_part += A_jm_k * B_mi_l - A_mi_k * B_jm_l
                        b[i, j, k, l] = d_part - w_part
        return b

    def _covariant(self, z, P, Q, G, gb, gt):
        def pq_at(w):
            fb_, ft_, gb_, gt_, G_ = self.frame(w)
            a_ = self._a(G_)
            d_ = self._central(lambda v: self._a(self.frame(v)[4]), w, H_FIELD)
            P_, Q_ = self._pq(a_, d_, G_, gb_, gt_)
            return np.concatenate([P_.ravel(), Q_.ravel()])

        d = self._central(pq_at, z, H_NESTED)
        dP = [dc[:4].reshape(2, 2) for dc in d]
        dQ = [dc[4:].reshape(2, 2) for dc in d]
        out = {}
        for name, T, dT in (("p", P, dP), ("q", Q, dQ)):
            first = _zeros(2, 2, 2)
            second = _zeros(2, 2, 2)
            for i in range(2):
                for j in range(2):
                    for k in range(2):
                        first[i, j, k] = (
                            mpmath.fsum(dT[l][i, j] * gb[l][k] for l in range(2))
                            - mpmath.fsum(T[m, j] * G[m, k, i] + T[i, m] * G[m, k, j] for m in range(2))
                        )
                        second[i, j, k] = (
                            mpmath.fsum(dT[2 + l][i, j] * gt[l][k] for l in range(2))
                            - mpmath.fsum(T[m, j] * G[m, i, k] + T[i, m] * G[m, j, k] for m in range(2))
                        )
            out[f"{name}1_ijk"] = first
            out[f"{name}2_ijk"] = second
            # scalar part: d(name) = name·ωᵢⁱ + name1_k ω₁ᵏ + name2_k ω₂ᵏ
            s = (T[0, 1] - T[1, 0]) / 2
            ds = [(dT[l][0, 1] - dT[l][1, 0]) / 2 for l in range(4)]
            one = _zeros(2)
            two = _zeros(2)
            for k in range(2):
                one[k] = mpmath.fsum(ds[l] * gb[l][k] for l in range(2)) - s * mpmath.fsum(G[i, k, i] for i in range(2))
                two[k] = mpmath.fsum(ds[2 + l] * gt[l][k] for l in range(2)) - s * mpmath.fsum(G[i, i, k] for i in range(2))
            out[f"{name}1_i"] = one
            out[f"{name}2_i"] = two
        return out


def central_difference(func: Callable[[float], float], x: float, h: float = 1e-5) -> float:
    """Central difference with one Richardson step (error O(h⁴))."""
    d1 = (func(x + h) - func(x - h)) / (2 * h)
    d2 = (func(x + h / 2) - func(x - h / 2)) / h
    return (4 * d2 - d1) / 3
