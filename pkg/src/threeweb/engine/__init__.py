"""Chern connection, torsion, curvature and Pfaffian derivatives of a web."""

from .fields import WebFields, fields_for
from .invariants import (
    ChernConnection,
    CovariantPQ,
    CurvatureTensor,
    EngineError,
    FrameBatch,
    FrameInvariants,
    JacobianPair,
    PfaffianDerivatives,
    SecondOrderPfaffian,
    SingularJacobian,
    TorsionData,
    TorsionStructureError,
    chern_connection,
    compute_jacobians,
    covariant_pq,
    curvature,
    frame_batch,
    frame_invariants,
    pfaffian_derivatives,
    reconstruct_torsion,
    second_order_pfaffian,
    torsion,
)
from .web import Constraint, WebDefinition, parse_constraint
