"""Command line: classify web files, run the corpus, dump invariants at a point.

Exit codes: 0 success, 2 some verdict UNDETERMINED, 1 error or corpus mismatch.
Every tuning flag can also come from an environment variable THREEWEB_<FLAG>
(e.g. THREEWEB_SAMPLES, THREEWEB_TOL_ZERO); an explicit flag wins.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from itertools import product
from typing import Sequence

import numpy as np

from .classify import RunConfig, SamplingExhausted, full_report
from .classify.report import TABLE_COLUMNS
from .corpus import EXAMPLE_IDS, UnknownExample, export_corpus, load_example, run_regression
from .engine import EngineError, WebDefinition, frame_batch
from .expr import EvaluationError, ExprSyntaxError, Point, Program
from .webfile import WebFileError, load_web

ENV_PREFIX = "THREEWEB_"
EXIT_OK, EXIT_ERROR, EXIT_UNDETERMINED = 0, 1, 2
REGRESSION_TOL = 1e-7

# flag dest -> (env suffix, type)
TUNING = {
    "samples": ("SAMPLES", int),
    "seed": ("SEED", int),
    "tol_zero": ("TOL_ZERO", float),
    "tol_nonzero": ("TOL_NONZERO", float),
    "box": ("BOX", float),
    "format": ("FORMAT", str),
}


class UsageError(Exception):
    pass


def _add_tuning(p: argparse.ArgumentParser) -> None:
    p.add_argument("--samples", type=int, help="sample points per identity test (default 20)")
    p.add_argument("--seed", type=int, help="sampling seed (default 42)")
    p.add_argument("--tol-zero", dest="tol_zero", type=float, help="HOLDS threshold (default 1e-9)")
    p.add_argument("--tol-nonzero", dest="tol_nonzero", type=float, help="FAILS threshold (default 1e-6)")
    p.add_argument("--box", type=float, help="sampling box half-width (default 3)")
    p.add_argument("--format", choices=("text", "json"), help="output format (default text)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="threeweb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify the web in a web file")
    p.add_argument("file")
    _add_tuning(p)

    p = sub.add_parser("corpus", help="reproduce the corpus table and tensor regression")
    p.add_argument("--only", action="append", metavar="ID", help="restrict to an entry (repeatable)")
    p.add_argument("--export", metavar="DIR", help="write the corpus web files to DIR and exit")
    _add_tuning(p)

    p = sub.add_parser("invariants", help="print every invariant at one point")
    p.add_argument("file")
    p.add_argument("--at", required=True, metavar="x1,x2,y1,y2")
    _add_tuning(p)
    return parser


def resolve_config(args: argparse.Namespace, env=os.environ) -> RunConfig:
    values = {}
    for dest, (suffix, cast) in TUNING.items():
        v = getattr(args, dest, None)
        if v is None and ENV_PREFIX + suffix in env:
            raw = env[ENV_PREFIX + suffix]
            try:
                v = cast(raw)
            except ValueError:
                raise UsageError(f"{ENV_PREFIX + suffix}={raw!r} is not a valid {cast.__name__}") from None
        if v is not None:
            values["box_halfwidth" if dest == "box" else dest] = v
    try:
        return RunConfig(**values)
    except ValueError as e:
        raise UsageError(str(e)) from None


# -- classify ----------------------------------------------------------------

def cmd_classify(path: str, config: RunConfig, out=sys.stdout) -> int:
    web = load_web(path)
    report = full_report(web, config)
    out.write((report.to_json() if config.format == "json" else report.to_text()) + "\n")
    return EXIT_UNDETERMINED if report.has_undetermined else EXIT_OK


# -- corpus ------------------------------------------------------------------

def _cell(labels) -> str:
    return " ".join(labels) or "-"


def corpus_rows(config: RunConfig, ids=EXAMPLE_IDS) -> list[dict]:
    rows = []
    for i in ids:
        entry = load_example(i)
        report = full_report(entry.web, config)
        row = report.table_row()
        if entry.columns:
            mismatches = entry.row_mismatches(row)
        else:
            got = set(report.all_labels())
            mismatches = [] if got == set(entry.expected_classes) else [
                f"classes: expected {' '.join(sorted(entry.expected_classes))}, got {' '.join(sorted(got))}"]
        regression = run_regression(entry, report.samples)
        failed = [(p, d) for p, d in regression if not d <= REGRESSION_TOL]
        rows.append({
            "example": str(entry.id),
            "row": row,
            "classes": report.classes,
            "isoclinicity": report.isoclinicity.value,
            "mismatches": mismatches,
            "tensors_checked": len(regression),
            "tensor_failures": [{"path": p, "deviation": d} for p, d in failed],
            "undetermined": report.has_undetermined,
        })
    return rows


def corpus_text(rows: list[dict]) -> str:
    head = ["Example"] + list(TABLE_COLUMNS)
    body = [[r["example"]] + [_cell(r["row"][c]) for c in TABLE_COLUMNS] for r in rows]
    widths = [max(len(x) for x in col) for col in zip(head, *body)]
    fmt = lambda cells: " | ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()  # noqa: E731
    lines = [fmt(head), "-+-".join("-" * w for w in widths)]
    for r, cells in zip(rows, body):
        line = fmt(cells)
        flags = []
        if r["isoclinicity"] in ("ISOCLINIC", "ISOCLINICLY_GEODESIC"):
            flags.append(r["isoclinicity"])
        if r["undetermined"]:
            flags.append("UNDETERMINED")
        lines.append(line + ("   [" + ", ".join(flags) + "]" if flags else ""))
    lines.append("")
    ok = True
    for r in rows:
        for m in r["mismatches"]:
            lines.append(f"mismatch {r['example']}: {m}")
            ok = False
        for f in r["tensor_failures"]:
            lines.append(f"tensor {r['example']}: {f['path']} deviates by {f['deviation']:.3e}")
            ok = False
    checked = sum(r["tensors_checked"] for r in rows)
    lines.append(f"{len(rows)} entries, {checked} verified tensors checked: " + ("all match" if ok else "MISMATCH"))
    return "\n".join(lines)


def cmd_corpus(config: RunConfig, only: Sequence[str] | None = None, out=sys.stdout) -> int:
    ids = EXAMPLE_IDS if not only else [load_example(i).id for i in only]
    rows = corpus_rows(config, ids)
    if config.format == "json":
        out.write(json.dumps({"config": config.echo(), "rows": rows}, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(corpus_text(rows) + "\n")
    if any(r["undetermined"] for r in rows):
        return EXIT_UNDETERMINED
    if any(r["mismatches"] or r["tensor_failures"] for r in rows):
        return EXIT_ERROR
    return EXIT_OK


# -- invariants ----------------------------------------------------------------

class DomainError(ValueError):
    pass


def parse_point(text: str) -> Point:
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 4:
        raise UsageError(f"--at needs 4 comma-separated numbers, got {text!r}")
    try:
        return Point(*(float(s) for s in parts))
    except ValueError:
        raise UsageError(f"--at: not a number in {text!r}") from None


def check_domain(web: WebDefinition, pt: Point) -> None:
    X = np.array([pt.as_tuple()], dtype=float)
    if web.domain_constraints:
        vals, bad = Program([c.expr for c in web.domain_constraints]).run(X, strict=False)
        for c, v in zip(web.domain_constraints, vals):
            if bad[0] or not bool(np.all(c.satisfied(v))):
                raise DomainError(f"point {pt.as_tuple()} violates domain constraint {c}")


def _labels(name: str, arr: np.ndarray, upper_first: bool = False):
    for idx in product(range(2), repeat=arr.ndim):
        digits = "".join(str(i + 1) for i in idx)
        label = f"{name}^{digits[0]}_{digits[1:]}" if upper_first else f"{name}_{digits}"
        yield label, float(arr[idx])


def invariant_table(web: WebDefinition, pt: Point) -> list[tuple[str, list[tuple[str, float]]]]:
    check_domain(web, pt)
    try:
        b = frame_batch(web, np.array([pt.as_tuple()]))
    except (EvaluationError, ArithmeticError) as e:
        raise DomainError(f"point {pt.as_tuple()} is singular for this web: {e}") from None
    r = 0
    groups = [
        ("Jacobians", list(_labels("fbar", b.f_bar[r])) + list(_labels("ftilde", b.f_tilde[r]))
         + [("det_bar", float(b.det_bar[r])), ("det_tilde", float(b.det_tilde[r]))]),
        ("connection", list(_labels("Gamma", b.gamma[r], True))),
        ("torsion", list(_labels("a", b.a[r]))),
        ("curvature", list(_labels("b", b.b[r], True))),
        ("Pfaffian derivatives", list(_labels("p", b.p_ij[r])) + list(_labels("q", b.q_ij[r]))
         + [("p", float(b.p[r])), ("q", float(b.q[r]))]),
        ("second order", [lab for name in ("p1", "p2", "q1", "q2")
                          for lab in _labels(name, getattr(b, f"{name}_i")[r])]),
        ("covariant derivatives", [lab for name in ("p1", "p2", "q1", "q2")
                                   for lab in _labels(name, getattr(b, f"{name}_ijk")[r])]),
    ]
    return groups


def cmd_invariants(path: str, point: Point, config: RunConfig, out=sys.stdout) -> int:
    web = load_web(path)
    groups = invariant_table(web, point)
    if config.format == "json":
        doc = {"web": web.name, "point": list(point.as_tuple()),
               "values": {lab: v for _, items in groups for lab, v in items}}
        out.write(json.dumps(doc, indent=2) + "\n")
        return EXIT_OK
    out.write(f"web: {web.name}\npoint: ({', '.join(repr(v) for v in point.as_tuple())})\n")
    for title, items in groups:
        out.write(f"{title}:\n")
        for lab, v in items:
            out.write(f"  {lab:<12} {v!r}\n")
    return EXIT_OK


# -- entry point ---------------------------------------------------------------

def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else EXIT_OK
    try:
        config = resolve_config(args)
        if args.command == "classify":
            return cmd_classify(args.file, config, out)
        if args.command == "corpus":
            if args.export:
                for p in export_corpus(args.export):
                    out.write(f"{p}\n")
                return EXIT_OK
            return cmd_corpus(config, args.only, out)
        return cmd_invariants(args.file, parse_point(args.at), config, out)
    except FileNotFoundError as e:
        err.write(f"error: file not found: {e.filename}\n")
    except WebFileError as e:
        err.write(f"error: {e}\n")
    except ExprSyntaxError as e:
        err.write(f"error: {e}\n")
    except (UsageError, DomainError, SamplingExhausted, EngineError, EvaluationError) as e:
        err.write(f"error: {e}\n")
    except UnknownExample as e:
        err.write(f"error: unknown corpus entry {e.args[0]!r}\n")
    return EXIT_ERROR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
