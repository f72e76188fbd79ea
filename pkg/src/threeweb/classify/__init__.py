"""Probabilistic identity testing and the web taxonomy built on it."""

from .config import RunConfig
from .identities import REGISTRY, UnknownIdentity, lookup, registered_ids
from .report import (
    TABLE_COLUMNS,
    ClassificationReport,
    curvature_fingerprint,
    exclusivity_violations,
    full_report,
    report_from_samples,
)
from .sampling import SampleSet, SamplingExhausted, sample_points
from .taxonomy import (
    CLASS_DEFS,
    LABELS,
    Evidence,
    Isoclinicity,
    LabelResult,
    LabelStatus,
    class_c_advisory,
    classify_E,
    classify_extendability,
    classify_geodesic_type,
    classify_isoclinicity,
    classify_transversal,
    deepest,
)
from .verdict import IdentityVerdict, Status, evaluate_identity, test_identity

__all__ = [
    "CLASS_DEFS",
    "LABELS",
    "REGISTRY",
    "TABLE_COLUMNS",
    "ClassificationReport",
    "Evidence",
    "IdentityVerdict",
    "Isoclinicity",
    "LabelResult",
    "LabelStatus",
    "RunConfig",
    "SampleSet",
    "SamplingExhausted",
    "Status",
    "UnknownIdentity",
    "class_c_advisory",
    "classify_E",
    "classify_extendability",
    "classify_geodesic_type",
    "classify_isoclinicity",
    "classify_transversal",
    "curvature_fingerprint",
    "deepest",
    "evaluate_identity",
    "exclusivity_violations",
    "full_report",
    "lookup",
    "registered_ids",
    "report_from_samples",
    "sample_points",
    "test_identity",
]
