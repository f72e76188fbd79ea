"""Differential invariants of a web at sample points.

All computations are batched: ``frame_batch`` evaluates the symbolic field
program once over an (n, 4) array of points and assembles every tensor
with ``numpy.einsum``. The single-point operations are thin views on it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..expr import DEFAULT_DTYPE, Point, Program
from .fields import WebFields, fields_for
from .web import WebDefinition

SINGULAR_DET = 1e-10
INVERSE_TOL = 1e-12
TORSION_TOL = 1e-10


class EngineError(Exception):
    pass


class SingularJacobian(EngineError):
    def __init__(self, message: str, row: int | None = None):
        self.row = row
        super().__init__(message)


class TorsionStructureError(EngineError):
    pass


# -- value types --------------------------------------------------------------

@dataclass(frozen=True)
class JacobianPair:
    f_bar: np.ndarray  # f̄[i, j] = ∂fⁱ/∂xʲ
    f_tilde: np.ndarray
    g_bar: np.ndarray  # ḡ[l, j], inverse of f̄
    g_tilde: np.ndarray


@dataclass(frozen=True)
class ChernConnection:
    gamma: np.ndarray  # Γ[i, j, k] = Γⁱⱼₖ


@dataclass(frozen=True)
class TorsionData:
    a_jk_i: np.ndarray  # a[i, j, k] = aⁱⱼₖ
    a: np.ndarray  # (a₁, a₂)


@dataclass(frozen=True)
class CurvatureTensor:
    b: np.ndarray  # b[i, j, k, l] = bⁱⱼₖₗ


@dataclass(frozen=True)
class PfaffianDerivatives:
    p_ij: np.ndarray
    q_ij: np.ndarray
    p: object
    q: object


@dataclass(frozen=True)
class SecondOrderPfaffian:
    p1_i: np.ndarray
    p2_i: np.ndarray
    q1_i: np.ndarray
    q2_i: np.ndarray


@dataclass(frozen=True)
class CovariantPQ:
    p1_ijk: np.ndarray
    p2_ijk: np.ndarray
    q1_ijk: np.ndarray
    q2_ijk: np.ndarray


@dataclass(frozen=True)
class FrameInvariants:
    point: Point
    jac: JacobianPair
    gamma: ChernConnection
    torsion: TorsionData
    curvature: CurvatureTensor
    pq: PfaffianDerivatives
    pq2: SecondOrderPfaffian
    cov_pq: CovariantPQ


@dataclass
class FrameBatch:
    """Every invariant at n points; leading axis is the sample index."""

    points: np.ndarray
    f_bar: np.ndarray
    f_tilde: np.ndarray
    det_bar: np.ndarray
    det_tilde: np.ndarray
    g_bar: np.ndarray
    g_tilde: np.ndarray
    gamma: np.ndarray
    level: int
    a_jk_i: np.ndarray | None = None
    a: np.ndarray | None = None
    d_gamma: np.ndarray | None = None  # (n, 4, 2, 2, 2), axis 1 over x1, x2, y1, y2
    d_a: np.ndarray | None = None  # (n, 2, 4)
    b: np.ndarray | None = None
    p_ij: np.ndarray | None = None
    q_ij: np.ndarray | None = None
    d_p_ij: np.ndarray | None = None  # (n, 4, 2, 2)
    d_q_ij: np.ndarray | None = None
    p: np.ndarray | None = None
    q: np.ndarray | None = None
    p1_i: np.ndarray | None = None
    p2_i: np.ndarray | None = None
    q1_i: np.ndarray | None = None
    q2_i: np.ndarray | None = None
    p1_ijk: np.ndarray | None = None
    p2_ijk: np.ndarray | None = None
    q1_ijk: np.ndarray | None = None
    q2_ijk: np.ndarray | None = None

    def __len__(self) -> int:
        return self.points.shape[0]

    def jacobians(self, r: int) -> JacobianPair:
        return JacobianPair(self.f_bar[r], self.f_tilde[r], self.g_bar[r], self.g_tilde[r])

    def at(self, r: int) -> FrameInvariants:
        if self.level < 3:
            raise ValueError("full frame invariants need a level-3 batch")
        return FrameInvariants(
            point=Point.of(list(self.points[r])),
            jac=self.jacobians(r),
            gamma=ChernConnection(self.gamma[r]),
            torsion=TorsionData(self.a_jk_i[r], self.a[r]),
            curvature=CurvatureTensor(self.b[r]),
            pq=PfaffianDerivatives(self.p_ij[r], self.q_ij[r], self.p[r], self.q[r]),
            pq2=SecondOrderPfaffian(self.p1_i[r], self.p2_i[r], self.q1_i[r], self.q2_i[r]),
            cov_pq=CovariantPQ(self.p1_ijk[r], self.p2_ijk[r], self.q1_ijk[r], self.q2_ijk[r]),
        )


# -- numerics -----------------------------------------------------------------

def _as_points(points, dtype) -> np.ndarray:
    if isinstance(points, Point):
        points = [points.as_tuple()]
    elif isinstance(points, np.ndarray):
        pass
    elif len(points) and np.ndim(points[0]) == 0 and not isinstance(points[0], Point):
        points = [tuple(points)]
    else:
        points = [p.as_tuple() if isinstance(p, Point) else tuple(p) for p in points]
    X = np.asarray(points, dtype=dtype)
    if X.ndim == 1:
        X = X.reshape(1, 4)
    if X.shape[1:] != (4,):
        raise ValueError("points must have shape (n, 4)")
    return X


def _inv2(m: np.ndarray, det: np.ndarray) -> np.ndarray:
    inv = np.empty_like(m)
    inv[:, 0, 0] = m[:, 1, 1]
    inv[:, 0, 1] = -m[:, 0, 1]
    inv[:, 1, 0] = -m[:, 1, 0]
    inv[:, 1, 1] = m[:, 0, 0]
    return inv / det[:, None, None]


def _jacobian_program(wf: WebFields) -> Program:
    with wf._lock:
        prog = wf.__dict__.get("_jac_program")
        if prog is None:
            roots = [m[i][j] for m in (wf.f_bar, wf.f_tilde) for i in range(2) for j in range(2)]
            prog = Program(roots + [wf.det_bar, wf.det_tilde])
            wf.__dict__["_jac_program"] = prog
        return prog


def jacobian_arrays(web: WebDefinition, X: np.ndarray, dtype=DEFAULT_DTYPE):
    wf = fields_for(web)
    vals, _ = _jacobian_program(wf).run(X, dtype=dtype)
    n = X.shape[0]
    fb = np.stack(vals[0:4], axis=1).reshape(n, 2, 2)
    ft = np.stack(vals[4:8], axis=1).reshape(n, 2, 2)
    return fb, ft, vals[8], vals[9]


def check_jacobians(det_bar, det_tilde, X, threshold: float = SINGULAR_DET) -> None:
    for name, det in (("det(f_bar)", det_bar), ("det(f_tilde)", det_tilde)):
        small = np.abs(det) < threshold
        if np.any(small):
            r = int(np.flatnonzero(small)[0])
            pt = ", ".join(repr(float(v)) for v in X[r])
            raise SingularJacobian(f"{name} = {float(det[r]):.3g} at ({pt})", row=r)


def frame_batch(
    web: WebDefinition, points, *, level: int = 3, dtype=DEFAULT_DTYPE
) -> FrameBatch:
    """Evaluate invariants up to ``level`` (1: Γ, 2: a and b, 3: everything)."""
    X = _as_points(points, dtype)
    n = X.shape[0]
    fb, ft, det_b, det_t = jacobian_arrays(web, X, dtype)
    check_jacobians(det_b, det_t, X)
    wf = fields_for(web)
    vals, _ = wf.program(level).run(X, dtype=dtype)
    it = iter(vals)

    def take(count: int, shape: tuple) -> np.ndarray:
        return np.stack([next(it) for _ in range(count)], axis=1).reshape((n,) + shape)

    take(8, (8,))  # Jacobians again, already in hand
    take(2, (2,))
    G = take(8, (2, 2, 2))
    gb, gt = _inv2(fb, det_b), _inv2(ft, det_t)
    batch = FrameBatch(X, fb, ft, det_b, det_t, gb, gt, G, level)
    if level < 2:
        return batch

    batch.a = take(2, (2,))
    batch.d_gamma = take(32, (4, 2, 2, 2))
    batch.d_a = take(8, (2, 4))
    A = 0.5 * (G - G.transpose(0, 1, 3, 2))
    batch.a_jk_i = A
    batch.b = _curvature(G, A, batch.d_gamma, gb, gt)
    if level < 3:
        return batch

    P = take(4, (2, 2))
    dP = take(16, (4, 2, 2))
    Q = take(4, (2, 2))
    dQ = take(16, (4, 2, 2))
    batch.p_ij, batch.q_ij, batch.d_p_ij, batch.d_q_ij = P, Q, dP, dQ
    batch.p = 0.5 * (P[:, 0, 1] - P[:, 1, 0])
    batch.q = 0.5 * (Q[:, 0, 1] - Q[:, 1, 0])
    dp = 0.5 * (dP[:, :, 0, 1] - dP[:, :, 1, 0])
    dq = 0.5 * (dQ[:, :, 0, 1] - dQ[:, :, 1, 0])
    tr1 = np.einsum("niki->nk", G)  # ωᵢⁱ along ω₁ᵏ
    tr2 = np.einsum("niik->nk", G)  # ωᵢⁱ along ω₂ᵏ
    batch.p1_i = np.einsum("nl,nlk->nk", dp[:, :2], gb) - batch.p[:, None] * tr1
    batch.p2_i = np.einsum("nl,nlk->nk", dp[:, 2:], gt) - batch.p[:, None] * tr2
    batch.q1_i = np.einsum("nl,nlk->nk", dq[:, :2], gb) - batch.q[:, None] * tr1
    batch.q2_i = np.einsum("nl,nlk->nk", dq[:, 2:], gt) - batch.q[:, None] * tr2
    batch.p1_ijk, batch.p2_ijk = _covariant(P, dP, G, gb, gt)
    batch.q1_ijk, batch.q2_ijk = _covariant(Q, dQ, G, gb, gt)
    return batch


def _curvature(G, A, dG, gb, gt) -> np.ndarray:
    dGx, dGy = dG[:, :2], dG[:, 2:]
    return 0.5 * (
        np.einsum("nmikl,nmj->nijkl", dGx, gb)
        + np.einsum("nmijl,nmk->nijkl", dGx, gb)
        - np.einsum("nmikj,nml->nijkl", dGy, gt)
        - np.einsum("nmikl,nmj->nijkl", dGy, gt)
        + np.einsum("nmjl,nikm->nijkl", G, G)
        - np.einsum("nmkj,niml->nijkl", G, G)
        + 2 * np.einsum("nmkl,nimj->nijkl", G, A)
    )


def _covariant(T, dT, G, gb, gt):
    """∇Tᵢⱼ = dTᵢⱼ − Tₘⱼωᵢᵐ − Tᵢₘωⱼᵐ split along ω₁ᵏ and ω₂ᵏ."""
    first = (
        np.einsum("nlij,nlk->nijk", dT[:, :2], gb)
        - np.einsum("nmj,nmki->nijk", T, G)
        - np.einsum("nim,nmkj->nijk", T, G)
    )
    second = (
        np.einsum("nlij,nlk->nijk", dT[:, 2:], gt)
        - np.einsum("nmj,nmik->nijk", T, G)
        - np.einsum("nim,nmjk->nijk", T, G)
    )
    return first, second


# -- single-point operations ----------------------------------------------------

def compute_jacobians(web: WebDefinition, pt) -> JacobianPair:
    X = _as_points(pt, DEFAULT_DTYPE)
    fb, ft, det_b, det_t = jacobian_arrays(web, X)
    check_jacobians(det_b, det_t, X)
    gb, gt = _inv2(fb, det_b), _inv2(ft, det_t)
    eye = np.eye(2)
    for m, g in ((fb, gb), (ft, gt)):
        scale = 1 + np.abs(m[0]).max() * np.abs(g[0]).max()
        if np.abs(m[0] @ g[0] - eye).max() > INVERSE_TOL * scale:
            raise SingularJacobian("Jacobian inverse check failed (ill-conditioned)")
    return JacobianPair(fb[0], ft[0], gb[0], gt[0])


def chern_connection(web: WebDefinition, pt) -> ChernConnection:
    return ChernConnection(frame_batch(web, pt, level=1).gamma[0])


def torsion(gamma: ChernConnection) -> TorsionData:
    G = np.asarray(gamma.gamma)
    A = 0.5 * (G - G.transpose(0, 2, 1))
    a = np.array([2 * A[1, 0, 1], -2 * A[0, 0, 1]])
    rebuilt = reconstruct_torsion(a)
    scale = 1 + np.abs(A).max()
    if np.abs(rebuilt - A).max() > TORSION_TOL * scale:
        raise TorsionStructureError("antisymmetrized connection is not of the form a_[j δ_k]^i")
    return TorsionData(A, a)


def reconstruct_torsion(a) -> np.ndarray:
    """aⁱⱼₖ = ½(aⱼδⁱₖ − aₖδⁱⱼ)."""
    a = np.asarray(a)
    d = np.eye(2, dtype=a.dtype)
    return 0.5 * (np.einsum("j,ik->ijk", a, d) - np.einsum("k,ij->ijk", a, d))


def curvature(web: WebDefinition, pt) -> CurvatureTensor:
    return CurvatureTensor(frame_batch(web, pt, level=2).b[0])


def pfaffian_derivatives(web: WebDefinition, pt) -> PfaffianDerivatives:
    return frame_batch(web, pt).at(0).pq


def second_order_pfaffian(web: WebDefinition, pt) -> SecondOrderPfaffian:
    return frame_batch(web, pt).at(0).pq2


def covariant_pq(web: WebDefinition, pt) -> CovariantPQ:
    return frame_batch(web, pt).at(0).cov_pq


def frame_invariants(web: WebDefinition, pt) -> FrameInvariants:
    return frame_batch(web, pt).at(0)
