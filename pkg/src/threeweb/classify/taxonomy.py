"""Class definitions of the taxonomy and the classifiers built on them.

Every label is a conjunction of identity verdicts: a condition either
requires the identity to HOLD on the sample set, or requires it to FAIL
(the quantity is not identically zero). A label is ASSERTED when all its
conditions and its parent's conditions are met, REJECTED as soon as one is
decided the wrong way, and UNDETERMINED otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from ..engine import FrameBatch, WebDefinition, frame_batch
from .config import RunConfig
from .sampling import SampleSet
from .verdict import IdentityVerdict, Status, evaluate_identity

HOLDS, FAILS = Status.HOLDS, Status.FAILS

LABELS: tuple[str, ...] = (
    "A", "A1", "A11", "A12", "A13", "A131", "A132", "A14", "A141", "A142",
    "A2", "A21", "A22", "A3", "A31", "A32", "B", "C", "D", "D1", "D11", "D12",
    "E1", "E11", "E111", "E12", "E13", "E131", "E2", "E21", "E22", "E23",
    "E3", "E31", "E32", "E321", "E33", "F", "G1", "G2", "G3", "G4",
    "ISOCLINIC", "ISOCLINICLY_GEODESIC",
)
ORDER = {label: i for i, label in enumerate(LABELS)}


class Isoclinicity(str, Enum):
    NONISOCLINIC = "NONISOCLINIC"
    ISOCLINIC = "ISOCLINIC"
    ISOCLINICLY_GEODESIC = "ISOCLINICLY_GEODESIC"
    UNDETERMINED = "UNDETERMINED"

    def __str__(self) -> str:
        return self.value


class LabelStatus(str, Enum):
    ASSERTED = "ASSERTED"
    REJECTED = "REJECTED"
    UNDETERMINED = "UNDETERMINED"


Condition = tuple[str, Status]  # (identity id, required outcome)


@dataclass(frozen=True)
class ClassDef:
    label: str
    conditions: tuple[Condition, ...]
    parent: str | None = None


def _h(*ids: str) -> tuple[Condition, ...]:
    return tuple((i, HOLDS) for i in ids)


def _f(*ids: str) -> tuple[Condition, ...]:
    return tuple((i, FAILS) for i in ids)


NONGEODESIC = _f("a=0")
A1_BASE = _f("a1=0", "a2=0") + _h("(8)")

CLASS_DEFS: dict[str, ClassDef] = {
    d.label: d
    for d in (
        ClassDef("A", NONGEODESIC + _h("(8)")),
        ClassDef("A1", A1_BASE, "A"),
        ClassDef("A11", _h("(17)"), "A1"),
        ClassDef("A12", _h("(24)"), "A1"),
        ClassDef("A13", _h("(11)", "(15)"), "A1"),
        ClassDef("A131", _h("(11)", "(22)"), "A13"),
        ClassDef("A132", _h("(11)", "(15)", "(27)"), "A13"),
        ClassDef("A14", _h("(12)", "(16)"), "A1"),
        ClassDef("A141", _h("(12)", "(23)"), "A14"),
        ClassDef("A142", _h("(12)", "(16)", "(28)"), "A14"),
        ClassDef("A2", _h("(9)", "(13)"), "A"),
        ClassDef("A21", _h("(9)", "(20)"), "A2"),
        ClassDef("A22", _h("(9)", "(13)", "(25)"), "A2"),
        ClassDef("A3", _h("(10)", "(14)"), "A"),
        ClassDef("A31", _h("(10)", "(21)"), "A3"),
        ClassDef("A32", _h("(10)", "(14)", "(26)"), "A3"),
        ClassDef("B", NONGEODESIC + _f("(8)")),
        ClassDef("C", _f("(38)")),
        ClassDef("D", _h("(38)")),
        ClassDef("D1", _h("(39)"), "D"),
        ClassDef("D11", _h("(40)"), "D1"),
        ClassDef("D12", _h("(41)"), "D11"),
        ClassDef("E1", _f("a1=0", "a2=0", "a1=a2")),
        ClassDef("E11", _h("E11"), "E1"),
        ClassDef("E111", _h("E111"), "E11"),
        ClassDef("E12", _h("E12"), "E1"),
        ClassDef("E13", _h("E13"), "E1"),
        ClassDef("E131", _h("E131"), "E13"),
        ClassDef("E2", _h("E2")),
        ClassDef("E21", _h("E21"), "E2"),
        ClassDef("E22", _h("E22"), "E2"),
        ClassDef("E23", _h("E23"), "E2"),
        ClassDef("E3", _h("E3")),
        ClassDef("E31", _h("E31"), "E3"),
        ClassDef("E32", _h("E32"), "E3"),
        ClassDef("E321", _h("E321"), "E32"),
        ClassDef("E33", _h("E33"), "E3"),
        ClassDef("G1", _h("p=0") + _f("q=0")),
        ClassDef("G2", _h("q=0") + _f("p=0")),
        ClassDef("G3", _h("p=q") + _f("p=0")),
        ClassDef("F", _f("p=0", "q=0", "p=q") + _h("(43)")),
        ClassDef("G4", _f("p=0", "q=0", "p=q", "(43)")),
    )
}

# parent links used only when projecting onto the deepest labels: the
# specializations A131/A141 refine A11, and A132/A142 refine A12
EXTRA_PARENTS = {"A131": ("A11",), "A141": ("A11",), "A132": ("A12",), "A142": ("A12",)}

# E1 is a grouping node: it is reported only together with one of its subclasses
GROUPING = {"E1": ("E11", "E12", "E13")}

FAMILIES = {
    "transversal": ("A", "A1", "A11", "A12", "A13", "A131", "A132", "A14", "A141", "A142",
                    "A2", "A21", "A22", "A3", "A31", "A32", "B"),
    "geodesic": ("C", "D", "D1", "D11", "D12"),
    "E": ("E1", "E11", "E111", "E12", "E13", "E131", "E2", "E21", "E22", "E23",
          "E3", "E31", "E32", "E321", "E33"),
    "extendability": ("G1", "G2", "G3", "F", "G4"),
}


def ancestors(label: str) -> list[str]:
    out = []
    stack = [label]
    while stack:
        cur = stack.pop()
        parents = [CLASS_DEFS[cur].parent] if cur in CLASS_DEFS and CLASS_DEFS[cur].parent else []
        parents += list(EXTRA_PARENTS.get(cur, ()))
        for p in parents:
            if p not in out:
                out.append(p)
                stack.append(p)
    return out


def deepest(labels: Iterable[str]) -> list[str]:
    labels = set(labels)
    covered = {a for lab in labels for a in ancestors(lab)}
    return sorted(labels - covered, key=ORDER.__getitem__)


# -- evidence ----------------------------------------------------------------

@dataclass
class LabelResult:
    label: str
    status: LabelStatus
    verdicts: tuple[IdentityVerdict, ...]


class Evidence:
    """Memoized identity verdicts for one web on one shared sample set."""

    def __init__(self, web: WebDefinition, samples: SampleSet, config: RunConfig | None = None,
                 batch: FrameBatch | None = None):
        self.web = web
        self.samples = samples
        self.config = config or RunConfig(samples=samples.count, seed=samples.seed)
        self.batch = batch if batch is not None else frame_batch(web, samples.array())
        self._verdicts: dict[str, IdentityVerdict] = {}

    def verdict(self, identity_id: str) -> IdentityVerdict:
        v = self._verdicts.get(identity_id)
        if v is None:
            v = evaluate_identity(
                self.web, identity_id, self.batch,
                tol_zero=self.config.tol_zero, tol_nonzero=self.config.tol_nonzero,
            )
            self._verdicts[identity_id] = v
        return v

    @property
    def verdicts(self) -> dict[str, IdentityVerdict]:
        return dict(self._verdicts)

    def conditions(self, label: str) -> list[Condition]:
        chain = [label] + _parent_chain(label)
        out: list[Condition] = []
        for lab in reversed(chain):
            for cond in CLASS_DEFS[lab].conditions:
                if cond not in out:
                    out.append(cond)
        return out

    def label(self, label: str) -> LabelResult:
        conds = self.conditions(label)
        verdicts = tuple(self.verdict(i) for i, _ in conds)
        status = LabelStatus.ASSERTED
        for (_, want), v in zip(conds, verdicts):
            if v.status is Status.UNDETERMINED:
                status = LabelStatus.UNDETERMINED
            elif v.status is not want:
                status = LabelStatus.REJECTED
                break
        return LabelResult(label, status, verdicts)


def _parent_chain(label: str) -> list[str]:
    out = []
    cur = CLASS_DEFS[label].parent
    while cur:
        out.append(cur)
        cur = CLASS_DEFS[cur].parent
    return out


def _family(ev: Evidence, names: Iterable[str]) -> list[LabelResult]:
    results = {n: ev.label(n) for n in names}
    for group, children in GROUPING.items():
        if group in results and results[group].status is LabelStatus.ASSERTED:
            kids = [results[c].status for c in children if c in results]
            if LabelStatus.ASSERTED not in kids:
                results[group] = LabelResult(
                    group,
                    LabelStatus.UNDETERMINED if LabelStatus.UNDETERMINED in kids else LabelStatus.REJECTED,
                    results[group].verdicts,
                )
    return [r for r in results.values() if r.status is not LabelStatus.REJECTED]


# -- classifiers ---------------------------------------------------------------

def classify_isoclinicity(ev: Evidence) -> Isoclinicity:
    v = ev.verdict("(37)")
    if v.status is FAILS:
        return Isoclinicity.NONISOCLINIC
    if v.status is Status.UNDETERMINED:
        return Isoclinicity.UNDETERMINED
    a = ev.verdict("a=0")
    if a.status is HOLDS:
        return Isoclinicity.ISOCLINICLY_GEODESIC
    return Isoclinicity.ISOCLINIC


def classify_transversal(ev: Evidence) -> list[LabelResult]:
    if ev.verdict("a=0").status is HOLDS:
        return []  # isoclinicly geodesic: no a-distribution
    return _family(ev, FAMILIES["transversal"])


def classify_geodesic_type(ev: Evidence) -> list[LabelResult]:
    return _family(ev, FAMILIES["geodesic"])


def class_c_advisory(ev: Evidence) -> list[str]:
    """Shortcut evidence for class C; never decisive on its own."""
    notes = []
    if ev.verdict("bjjj-offdiag=0").status is FAILS:
        notes.append("some b^i_jjj with i != j is nonzero: suggests C")
    group = ev.verdict("(41)").status
    for layer in ("b1=0", "b2=0"):
        if ev.verdict(layer).status is HOLDS and group is FAILS:
            notes.append(f"upper layer {layer[1]} of b vanishes and b != 0: suggests C")
    if notes and ev.verdict("(38)").status is HOLDS:
        notes.append("conflict: (38) holds although the shortcuts point to C")
    return notes


def classify_E(ev: Evidence, iso: Isoclinicity | None = None) -> list[LabelResult]:
    iso = iso or classify_isoclinicity(ev)
    if iso is not Isoclinicity.NONISOCLINIC:
        return []
    return _family(ev, FAMILIES["E"])


def classify_extendability(ev: Evidence, iso: Isoclinicity | None = None) -> list[LabelResult]:
    iso = iso or classify_isoclinicity(ev)
    if iso is not Isoclinicity.NONISOCLINIC:
        return []
    return _family(ev, FAMILIES["extendability"])
