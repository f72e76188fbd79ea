"""Corpus entries: published webs with their expected tensors and table rows."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

import numpy as np

from ..engine import FrameBatch, WebDefinition, frame_batch
from ..expr import Expr, Program, parse_expression
from . import data
from .errata import ERRATA, UNVERIFIED

EXAMPLE_IDS: tuple = tuple(range(1, 19)) + ("group",)

# engine field, rank of the index tuple
_FIELDS = {
    "Gamma": ("gamma", 3),
    "b": ("b", 4),
    "a": ("a", 1),
    "p": ("p_ij", 2),
    "q": ("q_ij", 2),
    "p1": ("p1_i", 1),
    "p2": ("p2_i", 1),
    "q1": ("q1_i", 1),
    "q2": ("q2_i", 1),
}
_PATH = re.compile(r"^(Gamma|b)\^([12])_([12]+)$|^(a|p|q|p1|p2|q1|q2)(?:_([12]+))?$")


class UnknownExample(KeyError):
    pass


@dataclass(frozen=True)
class TensorPath:
    text: str
    field: str
    index: tuple[int, ...]

    def value(self, batch: FrameBatch) -> np.ndarray:
        arr = getattr(batch, self.field)
        return arr[(slice(None),) + self.index]


def parse_path(text: str) -> TensorPath:
    m = _PATH.match(text)
    if not m:
        raise ValueError(f"bad tensor path {text!r}")
    if m.group(1):
        name, digits = m.group(1), m.group(2) + m.group(3)
    else:
        name, digits = m.group(4), m.group(5) or ""
    if name in ("p", "q") and not digits:
        return TensorPath(text, name, ())
    fld, rank = _FIELDS[name]
    if len(digits) != rank:
        raise ValueError(f"{text!r}: expected {rank} indices")
    return TensorPath(text, fld, tuple(int(c) - 1 for c in digits))


def expand(text: str, defs: dict[str, str]) -> str:
    """Substitute local abbreviations until none remain."""
    if not defs:
        return text
    names = sorted(defs, key=len, reverse=True)
    pattern = re.compile(r"\b(" + "|".join(map(re.escape, names)) + r")\b")
    for _ in range(10):
        new = pattern.sub(lambda m: defs[m.group(1)], text)
        if new == text:
            return new
        text = new
    raise ValueError("abbreviations nest too deeply")


@dataclass(frozen=True)
class ExpectedTensor:
    path: TensorPath
    text: str
    expr: Expr
    verified: bool
    note: str = ""

    def as_tuple(self) -> tuple[str, Expr, bool]:
        return self.path.text, self.expr, self.verified


@dataclass(frozen=True)
class CorpusEntry:
    id: object
    web: WebDefinition
    expected_tensors: tuple[ExpectedTensor, ...]
    expected_classes: frozenset[str]
    errata_notes: str = ""
    table: dict[str, tuple[str, ...]] = field(default_factory=dict)
    columns: tuple[str, ...] = ()  # table columns that are compared
    params: tuple | None = None
    open_labels: frozenset[str] = frozenset()  # labels the table leaves undecided
    fourth_foliation: tuple[str, str] | None = None  # u₄ for extendable webs

    def row_mismatches(self, row: dict[str, list[str]]) -> list[str]:
        """Compared columns where a computed table row differs from the expected one."""
        out = []
        for col in self.columns:
            want = set(self.table[col]) - self.open_labels
            got = set(row.get(col, ())) - self.open_labels
            if want != got:
                out.append(f"{col}: expected {' '.join(sorted(want)) or '-'}, got {' '.join(sorted(got)) or '-'}")
        return out

    @property
    def verified_tensors(self) -> list[ExpectedTensor]:
        return [t for t in self.expected_tensors if t.verified]


def _tensors(key, spec: dict) -> tuple[ExpectedTensor, ...]:
    out = []
    skip = UNVERIFIED.get(key, {})
    for path, text in spec["tensors"]:
        expr = parse_expression(expand(text, spec.get("defs", {})))
        note = skip.get(path, "")
        out.append(ExpectedTensor(parse_path(path), text, expr, not note, note))
    return tuple(out)


def _classes(table: dict[str, tuple[str, ...]], columns) -> frozenset[str]:
    return frozenset(lab for c in columns for lab in table[c])


@lru_cache(maxsize=None)
def load_example(example_id) -> CorpusEntry:
    key = _normalize(example_id)
    if key == "group":
        spec = data.GROUP
        web = WebDefinition.from_text("group", spec["f1"], spec["f2"], spec["domain"])
        return CorpusEntry("group", web, _tensors("group", spec), frozenset(spec["expected"]),
                           ERRATA.get("group", ""))
    if key == 8:
        return _family_row(8, data.EXAMPLE8_C, data.TABLE_8, data.COLUMNS_8)
    if key == 9:
        return _family_row(9, data.EXAMPLE9_C, data.TABLE_9, data.COLUMNS_9, data.OPEN_9)
    spec = data.EXAMPLES[key]
    web = WebDefinition.from_text(f"example{key}", spec["f1"], spec["f2"], spec["domain"])
    cols = tuple(spec["table"])
    return CorpusEntry(key, web, _tensors(key, spec), _classes(spec["table"], cols),
                       ERRATA.get(key, ""), spec["table"], cols, fourth_foliation=spec.get("u4"))


def _normalize(example_id):
    if isinstance(example_id, str):
        s = example_id.strip().lower()
        if s == "group":
            return "group"
        if s.isdigit():
            example_id = int(s)
    if isinstance(example_id, int) and not isinstance(example_id, bool) and 1 <= example_id <= 18:
        return example_id
    raise UnknownExample(example_id)


def all_examples() -> list[CorpusEntry]:
    return [load_example(i) for i in EXAMPLE_IDS]


# -- polynomial family -----------------------------------------------------------

@dataclass(frozen=True)
class PolynomialWebParams:
    """Constants c[i][j][k] = c^{i+1}_{j+1,k+1} of uⁱ = xⁱ + yⁱ + cⁱⱼₖ xʲ yᵏ."""

    c: tuple

    def __post_init__(self):
        try:
            arr = tuple(tuple(tuple(Fraction(v) for v in row) for row in plane) for plane in self.c)
        except TypeError:
            raise ValueError("c must be a 2x2x2 array of rationals") from None
        if len(arr) != 2 or any(len(p) != 2 or any(len(r) != 2 for r in p) for p in arr):
            raise ValueError("c must be a 2x2x2 array")
        object.__setattr__(self, "c", arr)

    def __call__(self, i: int, j: int, k: int) -> Fraction:
        """cⁱⱼₖ with 1-based indices."""
        return self.c[i - 1][j - 1][k - 1]

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for plane in self.c for row in plane for v in row)

    def criterion(self) -> Fraction:
        """The constant whose nonvanishing forces p = q != 0."""
        c = self
        return ((c(2, 2, 2) + c(1, 1, 2)) * (c(2, 1, 2) - c(2, 2, 1))
                + (c(1, 1, 1) + c(2, 2, 1)) * (c(1, 1, 2) - c(1, 2, 1)))


def _num(v: Fraction) -> str:
    return f"({v.numerator}/{v.denominator})" if v.denominator != 1 else f"({v.numerator})"


def _lin(terms: Sequence[tuple[Fraction, str]], const: str = "") -> str:
    parts = [const] if const else []
    parts += [f"{_num(v)}*{var}" for v, var in terms if v != 0]
    return " + ".join(parts) or "0"


def polynomial_texts(params: PolynomialWebParams) -> dict[str, str]:
    c = params
    X, Y = ("x1", "x2"), ("y1", "y2")
    f = []
    for i in (1, 2):
        bil = [(c(i, j, k), f"{X[j - 1]}*{Y[k - 1]}") for j in (1, 2) for k in (1, 2)]
        f.append(_lin(bil, f"x{i} + y{i}"))
    # ∂f/∂x and ∂f/∂y entries, linear in the other coordinate block
    fx = {(i, j): _lin([(c(i, j, k), Y[k - 1]) for k in (1, 2)], "1" if i == j else "")
          for i in (1, 2) for j in (1, 2)}
    fy = {(i, k): _lin([(c(i, j, k), X[j - 1]) for j in (1, 2)], "1" if i == k else "")
          for i in (1, 2) for k in (1, 2)}
    d1 = f"({fx[1, 1]})*({fx[2, 2]}) - ({fx[2, 1]})*({fx[1, 2]})"
    d2 = f"({fy[1, 1]})*({fy[2, 2]}) - ({fy[2, 1]})*({fy[1, 2]})"
    n = lambda v: _num(v)  # noqa: E731
    a1 = (f"({n(c(2,2,1) - c(2,1,2))} + {n(c(2,1,1)*c(2,2,2) - c(2,1,2)*c(2,2,1))}*(y1 - x1)"
          f" + {n(c(1,1,2)*c(2,1,1) - c(1,1,1)*c(2,1,2))}*x1 + {n(c(1,2,2)*c(2,1,1) - c(1,2,1)*c(2,1,2))}*x2"
          f" + {n(c(1,1,1)*c(2,2,1) - c(1,2,1)*c(2,1,1))}*y1 + {n(c(1,1,2)*c(2,2,1) - c(1,2,2)*c(2,1,1))}*y2)"
          f"/(({d1})*({d2}))")
    a2 = (f"({n(c(1,1,2) - c(1,2,1))} + {n(c(1,1,1)*c(1,2,2) - c(1,1,2)*c(1,2,1))}*(y2 - x2)"
          f" + {n(c(1,2,2)*c(2,1,1) - c(1,2,1)*c(2,1,2))}*x1 + {n(c(1,2,2)*c(2,2,1) - c(1,2,1)*c(2,2,2))}*x2"
          f" + {n(c(1,1,2)*c(2,2,1) - c(1,2,2)*c(2,1,1))}*y1 + {n(c(1,1,2)*c(2,2,2) - c(1,2,2)*c(2,1,2))}*y2)"
          f"/(({d1})*({d2}))")
    pq = (f"({n((c(1,1,1) + c(2,2,1))*(c(1,1,2) - c(1,2,1)) - (c(2,2,2) + c(1,1,2))*(c(2,2,1) - c(2,1,2)))})"
          f"/(2*({d1})^2*({d2})^2)")
    return {"f1": f[0], "f2": f[1], "det_bar": d1, "det_tilde": d2, "a_1": a1, "a_2": a2, "pq": pq}


def _poly_name(params: PolynomialWebParams) -> str:
    flat = ",".join(str(v) for plane in params.c for row in plane for v in row)
    return f"poly({flat})"


def instantiate_polynomial(params: PolynomialWebParams | Sequence, *, entry_id=None) -> CorpusEntry:
    if not isinstance(params, PolynomialWebParams):
        params = PolynomialWebParams(params)
    t = polynomial_texts(params)
    name = _poly_name(params)
    domain = [f"{t['det_bar']} != 0", f"{t['det_tilde']} != 0"]
    web = WebDefinition.from_text(name if entry_id is None else f"example{entry_id}",
                                  t["f1"], t["f2"], domain, notes=name)
    tensors = []
    for path in ("a_1", "a_2", "p", "q"):
        text = t.get(path, t["pq"])
        note = UNVERIFIED.get("poly", {}).get(path, "")
        tensors.append(ExpectedTensor(parse_path(path), text, parse_expression(text), not note, note))
    if params.is_zero:
        expected = frozenset(data.GROUP["expected"])
    elif params.criterion() != 0:
        expected = frozenset({"G3"})
    else:
        expected = frozenset()  # the family criterion says nothing here
    return CorpusEntry(entry_id or name, web, tuple(tensors), expected,
                       ERRATA.get("poly", ""), params=params.c)


def _family_row(key: int, c, table, columns, open_labels=()) -> CorpusEntry:
    base = instantiate_polynomial(PolynomialWebParams(c), entry_id=key)
    tensors = base.expected_tensors
    if key == 9:
        spec = dict(data.EXAMPLE9_TENSORS)
        spec["defs"] = data.example9_defs(PolynomialWebParams(c))
        tensors = tensors + _tensors(9, spec)
    notes = "\n".join(n for n in (base.errata_notes, ERRATA.get(key, "")) if n)
    return CorpusEntry(key, base.web, tensors, _classes(table, columns), notes,
                       table, tuple(columns), params=base.params,
                       open_labels=frozenset(open_labels))


# -- regression --------------------------------------------------------------

def relative_deviation(engine: np.ndarray, expected: np.ndarray) -> np.ndarray:
    """|e − v| / max(1, |v|): relative for large values, absolute near zero."""
    engine = np.asarray(engine, dtype=float)
    expected = np.asarray(expected, dtype=float)
    return np.abs(engine - expected) / np.maximum(1.0, np.abs(expected))


def evaluate_expected(entry: CorpusEntry, points: np.ndarray, tensors=None) -> list[np.ndarray]:
    tensors = entry.expected_tensors if tensors is None else tensors
    # points are already admitted by the engine; a published denominator that is
    # a product of small factors is still finite, so only true poles raise
    vals, _ = Program([t.expr for t in tensors]).run(points, strict=True, eps_div=0.0)
    n = np.asarray(points).shape[0]
    return [np.broadcast_to(v, (n,)) for v in vals]


def run_regression(example, samples=20, *, seed: int = 42, include_unverified: bool = False,
                   box: float = 3.0) -> list[tuple[str, float]]:
    """Max relative deviation of each verified expected tensor from the engine."""
    from ..classify.sampling import SampleSet, sample_points

    entry = example if isinstance(example, CorpusEntry) else load_example(example)
    if isinstance(samples, SampleSet):
        points = samples.array()
    elif isinstance(samples, np.ndarray):
        points = samples
    else:
        points = sample_points(entry.web, int(samples), seed, box=box).array()
    tensors = [t for t in entry.expected_tensors if t.verified or include_unverified]
    if not tensors:
        return []
    batch = frame_batch(entry.web, points)
    out = []
    for t, v in zip(tensors, evaluate_expected(entry, points, tensors)):
        dev = relative_deviation(t.path.value(batch), v)
        out.append((t.path.text, float(np.max(dev))))
    return out


def index_labels(prefix: str, rank: int) -> list[tuple[tuple[int, ...], str]]:
    """Component labels such as ("b", 4) -> ((0,0,0,0), "b^1_111"), ..."""
    out = []
    for idx in product(range(2), repeat=rank):
        digits = "".join(str(i + 1) for i in idx)
        if prefix in ("Gamma", "b"):
            out.append((idx, f"{prefix}^{digits[0]}_{digits[1:]}"))
        else:
            out.append((idx, f"{prefix}_{digits}"))
    return out
