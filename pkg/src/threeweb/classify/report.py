"""Full classification report for one web on one shared sample set."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from ..engine import WebDefinition
from .config import RunConfig
from .identities import REGISTRY, lookup
from .sampling import SampleSet, sample_points
from .taxonomy import (
    FAMILIES,
    ORDER,
    Evidence,
    Isoclinicity,
    LabelResult,
    LabelStatus,
    classify_E,
    classify_extendability,
    classify_geodesic_type,
    classify_isoclinicity,
    classify_transversal,
    class_c_advisory,
    deepest,
)
from .verdict import IdentityVerdict, Status, decide

TABLE_COLUMNS = ("A", "B", "C", "D", "E", "F", "G")

EXCLUSIVE_GROUPS = (
    ("A-family", "B"),
    ("C", "D"),
    ("F", "G1", "G2", "G3", "G4"),
)


def component_name(i: int, j: int, k: int, l: int) -> str:
    return f"b^{i + 1}_{j + 1}{k + 1}{l + 1}"


def column_of(label: str) -> str | None:
    if label in ("ISOCLINIC", "ISOCLINICLY_GEODESIC"):
        return None
    if label == "B":
        return "B"
    if label[0] == "A":
        return "A"
    if label in ("C", "F"):
        return label
    if label[0] in "DEG":
        return label[0]
    return None


def exclusivity_violations(labels) -> list[str]:
    labels = set(labels)
    out = []
    for group in EXCLUSIVE_GROUPS:
        hits = []
        for g in group:
            if g == "A-family":
                if any(lab[0] == "A" for lab in labels):
                    hits.append(g)
            elif g in labels:
                hits.append(g)
        if len(hits) > 1:
            out.append(" and ".join(hits))
    return out


@dataclass
class ClassificationReport:
    web: WebDefinition
    config: RunConfig
    samples: SampleSet
    isoclinicity: Isoclinicity
    labels: tuple[LabelResult, ...]
    verdicts: dict[str, IdentityVerdict]
    fingerprint: tuple[str, ...]
    fingerprint_undetermined: tuple[str, ...] = ()
    advisories: tuple[str, ...] = field(default=())

    # -- views -------------------------------------------------------------
    def asserted(self) -> list[str]:
        return [r.label for r in self.labels if r.status is LabelStatus.ASSERTED]

    def undetermined_labels(self) -> list[str]:
        return [r.label for r in self.labels if r.status is LabelStatus.UNDETERMINED]

    @property
    def classes(self) -> list[str]:
        """Deepest asserted labels, plus the isoclinicity label when degenerate."""
        out = deepest(self.asserted())
        if self.isoclinicity in (Isoclinicity.ISOCLINIC, Isoclinicity.ISOCLINICLY_GEODESIC):
            out.append(self.isoclinicity.value)
        return out

    def all_labels(self) -> list[str]:
        out = list(self.asserted())
        if self.isoclinicity in (Isoclinicity.ISOCLINIC, Isoclinicity.ISOCLINICLY_GEODESIC):
            out.append(self.isoclinicity.value)
        return sorted(out, key=ORDER.__getitem__)

    def table_row(self) -> dict[str, list[str]]:
        row: dict[str, list[str]] = {c: [] for c in TABLE_COLUMNS}
        for lab in deepest(self.asserted()):
            col = column_of(lab)
            if col:
                row[col].append(lab)
        return row

    @property
    def has_undetermined(self) -> bool:
        return (
            self.isoclinicity is Isoclinicity.UNDETERMINED
            or bool(self.undetermined_labels())
            or any(v.status is Status.UNDETERMINED for v in self.verdicts.values())
        )

    def label_result(self, label: str) -> LabelResult | None:
        for r in self.labels:
            if r.label == label:
                return r
        return None

    # -- serialization -------------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "web": {
                "name": self.web.name,
                "f1": self.web.f1_text,
                "f2": self.web.f2_text,
                "domain": [str(c) for c in self.web.domain_constraints],
            },
            "config": self.config.echo(),
            "isoclinicity": self.isoclinicity.value,
            "classes": self.classes,
            "verdicts": {k: v.as_dict() for k, v in self.verdicts.items()},
            "fingerprint": list(self.fingerprint),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [
            f"web: {self.web.name}",
            f"  f1 = {self.web.f1_text}",
            f"  f2 = {self.web.f2_text}",
        ]
        if self.web.domain_constraints:
            lines.append("  domain: " + "; ".join(str(c) for c in self.web.domain_constraints))
        cfg = self.config
        lines.append(
            f"config: samples={cfg.samples} seed={cfg.seed} tol_zero={cfg.tol_zero!r} "
            f"tol_nonzero={cfg.tol_nonzero!r} box={cfg.box_halfwidth!r}"
        )
        lines.append(f"isoclinicity: {self.isoclinicity.value}")
        lines.append("classes: " + (" ".join(self.classes) or "(none)"))
        row = self.table_row()
        lines.append("table: " + " | ".join(f"{c}: {' '.join(row[c]) or '-'}" for c in TABLE_COLUMNS))
        und = self.undetermined_labels()
        if und:
            lines.append("undetermined: " + " ".join(und))
        lines.append("labels:")
        for r in self.labels:
            ids = ", ".join(f"{v.identity_id}={v.status.value}" for v in r.verdicts)
            lines.append(f"  {r.label:<21} {r.status.value:<12} {ids}")
        lines.append("verdicts:")
        for k, v in self.verdicts.items():
            w = "" if v.witness is None else "  witness=(" + ", ".join(repr(x) for x in v.witness.as_tuple()) + ")"
            lines.append(f"  {k:<16} {v.status.value:<12} max_residual={v.max_residual:.3e}{w}")
        lines.append("vanishing curvature components: " + (" ".join(self.fingerprint) or "(none)"))
        if self.fingerprint_undetermined:
            lines.append("undetermined curvature components: " + " ".join(self.fingerprint_undetermined))
        for note in self.advisories:
            lines.append(f"note: {note}")
        return "\n".join(lines)


def curvature_fingerprint(ev: Evidence) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Components bⁱⱼₖₗ that vanish identically, and those left undetermined."""
    b = np.asarray(ev.batch.b, dtype=float)
    zero, unknown = [], []
    for idx in product(range(2), repeat=4):
        comp = np.abs(b[(slice(None),) + idx])
        v = decide(component_name(*idx), comp / (1 + comp), ev.batch.points,
                   ev.config.tol_zero, ev.config.tol_nonzero)
        if v.status is Status.HOLDS:
            zero.append(component_name(*idx))
        elif v.status is Status.UNDETERMINED:
            unknown.append(component_name(*idx))
    return tuple(zero), tuple(unknown)


def _registry_order(verdicts: dict[str, IdentityVerdict]) -> dict[str, IdentityVerdict]:
    order = {k: i for i, k in enumerate(REGISTRY)}
    return {k: verdicts[k] for k in sorted(verdicts, key=lambda k: (order[lookup(k).id], k))}


def report_from_samples(web: WebDefinition, samples: SampleSet, config: RunConfig) -> ClassificationReport:
    ev = Evidence(web, samples, config)
    iso = classify_isoclinicity(ev)
    results: list[LabelResult] = []
    results += classify_transversal(ev)
    results += classify_geodesic_type(ev)
    results += classify_E(ev, iso)
    results += classify_extendability(ev, iso)
    results.sort(key=lambda r: ORDER[r.label])
    advisories = list(class_c_advisory(ev))
    asserted = [r.label for r in results if r.status is LabelStatus.ASSERTED]
    for clash in exclusivity_violations(asserted):
        advisories.append(f"exclusivity violated: {clash}")
    zero, unknown = curvature_fingerprint(ev)
    return ClassificationReport(
        web=web,
        config=config,
        samples=samples,
        isoclinicity=iso,
        labels=tuple(results),
        verdicts=_registry_order(ev.verdicts),
        fingerprint=zero,
        fingerprint_undetermined=unknown,
        advisories=tuple(advisories),
    )


def full_report(web: WebDefinition, config: RunConfig | None = None) -> ClassificationReport:
    """Run every classifier on one shared sample set drawn per the config."""
    config = config or RunConfig()
    samples = sample_points(web, config.samples, config.seed, box=config.box_halfwidth)
    return report_from_samples(web, samples, config)


__all__ = [
    "ClassificationReport",
    "EXCLUSIVE_GROUPS",
    "FAMILIES",
    "TABLE_COLUMNS",
    "column_of",
    "component_name",
    "curvature_fingerprint",
    "exclusivity_violations",
    "full_report",
    "report_from_samples",
]
