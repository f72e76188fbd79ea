"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line.

Tolerances are pinned here and never relaxed to make a criterion pass.
"""

from __future__ import annotations

import io
import subprocess
import sys
import time
from fractions import Fraction
from random import Random

import numpy as np

from threeweb import cli
from threeweb.classify import Isoclinicity, RunConfig, full_report, lookup, sample_points
from threeweb.classify.identities import Context, residuals
from threeweb.classify.verdict import test_identity as identity_verdict
from threeweb.corpus import PolynomialWebParams, instantiate_polynomial, load_example, relative_deviation, run_regression
from threeweb.engine import frame_batch, frame_invariants
from threeweb.engine.extension import abelian_equation_residual, fourth_foliation_covectors
from threeweb.expr import COORDINATES, Program, differentiate, parse_expression
from threeweb.oracle import FDOracle

EXAMPLES = tuple(range(1, 19))

REGRESSION_TOL = 1e-7
REGRESSION_SECONDS = 60.0
IDENTITY_TOL = 1e-8
ORACLE_TOL = 1e-6
ORACLE_POINTS = 10
EXT_TOL_43 = 1e-9
EXT_TOL_COVECTOR = 1e-8
EXT_TOL_ABELIAN = 1e-9
VIOLATION_MIN = 1e-4
VIOLATION_SHARE = 0.9
POLY_TOL = 1e-8
POLY_INSTANCES = 50
SEEDS = (1, 2, 3, 4, 5)

# (35)c as printed is rejected by the corpus; the resolved form is recorded in the ledger
STRUCTURE_IDS = ("(33)a", "(33)b", "(35)a", "(35)b", "(35)c-resolved", "(29)", "(47)")

CONFIG = RunConfig()


def _fmt(items) -> str:
    return ", ".join(items) if items else "none"


def test_criterion_1_tensor_regression(record):
    start = time.perf_counter()
    failures, checked = [], 0
    for i in EXAMPLES:
        for path, dev in run_regression(i, 20, seed=CONFIG.seed):
            checked += 1
            if not dev <= REGRESSION_TOL:
                failures.append(f"{i}:{path}={dev:.1e}")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < REGRESSION_SECONDS
    record(1, ok, f"{checked} verified tensors, {elapsed:.1f}s, failures: {_fmt(failures)}")
    assert not failures
    assert elapsed < REGRESSION_SECONDS


def test_criterion_2_table_reproduction(record):
    mismatches = []
    for i in EXAMPLES:
        entry = load_example(i)
        row = full_report(entry.web, CONFIG).table_row()
        mismatches += [f"{i} {m}" for m in entry.row_mismatches(row)]
    record(2, not mismatches, f"{len(mismatches)} mismatches: {_fmt(mismatches)}")
    assert not mismatches


def test_criterion_3_identity_suite(record):
    worst: dict[str, tuple[float, object]] = {k: (0.0, None) for k in STRUCTURE_IDS}
    for i in (*EXAMPLES, "group"):
        entry = load_example(i)
        samples = sample_points(entry.web, 20, CONFIG.seed)
        for ident in STRUCTURE_IDS:
            v = identity_verdict(entry.web, ident, samples)
            if v.max_residual > worst[ident][0]:
                worst[ident] = (v.max_residual, i)
    bad = [f"{k} {r:.1e} on {i}" for k, (r, i) in worst.items() if not r < IDENTITY_TOL]
    top = max(r for r, _ in worst.values())
    record(3, not bad, f"worst residual {top:.1e}; over tolerance: {_fmt(bad)}")
    assert not bad


def test_criterion_4_oracle_equivalence(record):
    worst, where = 0.0, None
    for i in (*EXAMPLES, "group"):
        web = load_example(i).web
        X = sample_points(web, ORACLE_POINTS, CONFIG.seed + 1).array(float)
        batch = frame_batch(web, X)
        oracle = FDOracle(web.f1_text, web.f2_text)
        for k, x in enumerate(X):
            ref = oracle.invariants(list(x))
            for name in ("gamma", "a", "b", "p_ij", "q_ij"):
                want = np.array(ref[name].tolist(), dtype=float)
                got = np.asarray(getattr(batch, name)[k], dtype=float)
                dev = float(relative_deviation(got, want).max())
                if dev > worst:
                    worst, where = dev, f"{i}:{name}"
    ok = worst <= ORACLE_TOL
    record(4, ok, f"max deviation {worst:.1e} ({where or 'all exact'})")
    assert ok


def _residual(web, ident, X):
    return residuals(lookup(ident).build(Context(web, frame_batch(web, X))))


def test_criterion_5_extension_checks(record):
    entry = load_example(1)
    web = entry.web
    X = sample_points(web, 20, CONFIG.seed).array()
    r43 = float(_residual(web, "(43)", X).max())

    u3 = [web.f1, web.f2]
    u4 = [parse_expression(t) for t in entry.fourth_foliation]
    grads = Program([differentiate(f, c) for f in u4 for c in COORDINATES])
    cov, ab = 0.0, 0.0
    for x in X:
        w = np.array([np.asarray(v, dtype=float) for v in fourth_foliation_covectors(frame_invariants(web, x))])
        vals, _ = grads.run(x.reshape(1, -1))
        g = np.array([float(v[0]) for v in vals]).reshape(2, 4)
        tangents = np.linalg.svd(g)[2][2:]  # orthonormal basis of the level-set tangent plane
        cov = max(cov, float(np.abs(w @ tangents.T).max() / (1 + np.abs(w).max())))
        ab = max(ab, abelian_equation_residual(u3, u4, x))

    shares = {}
    for i in (16, 17, 18):
        w = load_example(i).web
        r = _residual(w, "(43)", sample_points(w, 20, CONFIG.seed).array())
        shares[i] = float(np.mean(r > VIOLATION_MIN))

    parts = [r43 < EXT_TOL_43, cov < EXT_TOL_COVECTOR, ab < EXT_TOL_ABELIAN,
             *(s >= VIOLATION_SHARE for s in shares.values())]
    detail = (f"ex1 (43) {r43:.1e}, covectors {cov:.1e}, abelian {ab:.1e}; share of samples with (43) > "
              f"{VIOLATION_MIN:g}: " + ", ".join(f"{i}={s:.0%}" for i, s in shares.items()))
    record(5, all(parts), detail)
    assert all(parts)


def test_criterion_6_degeneracy_semantics(record):
    want = {2: "G1", 3: "G1", 4: "G2"}
    for i in range(5, 16):
        if load_example(i).table.get("G") == ("G3",):
            want[i] = "G3"
    wrong = []
    for i, label in want.items():
        got = full_report(load_example(i).web, CONFIG).table_row()["G"]
        if list(got) != [label]:
            wrong.append(f"{i} expected {label} got {' '.join(got) or '-'}")
    record(6, not wrong, f"{len(want)} rows checked, wrong: {_fmt(wrong)}")
    assert not wrong


def _random_c(rng: Random):
    return tuple(tuple(tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(2))
                       for _ in range(2)) for _ in range(2))


def test_criterion_7_polynomial_family(record):
    rng = Random(20240)
    worst, nonzero, wrong = 0.0, 0, []
    for n in range(POLY_INSTANCES):
        params = PolynomialWebParams(_random_c(rng))
        entry = instantiate_polynomial(params)
        report = full_report(entry.web, CONFIG)
        X = report.samples.array()
        worst = max(worst, float(_residual(entry.web, "p=q", X).max()))
        if params.criterion() != 0:
            nonzero += 1
            if report.isoclinicity is not Isoclinicity.NONISOCLINIC:
                wrong.append(f"#{n} {report.isoclinicity.value}")
    ok = worst < POLY_TOL and not wrong
    record(7, ok, f"{POLY_INSTANCES} instances, p=q residual {worst:.1e}, "
                  f"{nonzero} with nonzero criterion, not nonisoclinic: {_fmt(wrong)}")
    assert ok


def _corpus_output(seed: int, fmt: str = "text") -> tuple[int, str]:
    out = io.StringIO()
    code = cli.cmd_corpus(RunConfig(seed=seed, format=fmt), None, out)
    return code, out.getvalue()


def test_criterion_8_determinism(record):
    first = _corpus_output(CONFIG.seed)
    second = _corpus_output(CONFIG.seed)
    js1, js2 = _corpus_output(CONFIG.seed, "json"), _corpus_output(CONFIG.seed, "json")
    cmd = [sys.executable, "-m", "threeweb.cli", "corpus", "--format", "json"]
    runs = [subprocess.run(cmd, capture_output=True, check=False).stdout for _ in range(2)]
    identical = first == second and js1 == js2 and runs[0] == runs[1] and runs[0].decode() == js1[1]

    def classes(seed):
        cfg = RunConfig(seed=seed)
        return {i: frozenset(full_report(load_example(i).web, cfg).all_labels()) for i in (*EXAMPLES, "group")}

    base = classes(CONFIG.seed)
    drift = [f"seed {s}: {i}" for s in SEEDS for i, labels in classes(s).items() if labels != base[i]]
    ok = identical and not drift
    record(8, ok, f"byte-identical reruns (in process and 2 CLI processes): {identical}; class drift over seeds {SEEDS}: {_fmt(drift)}")
    assert ok

