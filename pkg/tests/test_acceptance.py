"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line (also collected into the terminal
summary).  Run alone with ``pytest tests/test_acceptance.py -s``.
"""

import io
import json
import time
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction

import pytest

from degbell.cli import main
from degbell.families import FamilyParams, dobinski_float
from degbell.verify import SuiteConfig, run_suite, suite_json

from conftest import ACCEPTANCE_LINES

EGF_IDS = ("egf.stirling", "egf.bell-families")
SPIVEY_IDS = (
    "spivey.bell-numbers",
    "spivey.degenerate-bell",
    "spivey.fully-degenerate-Bel-fubini",
    "spivey.two-var-B",
    "spivey.two-var-r-B",
)
OPERATOR_IDS = (
    "operator.stirling-expansion",
    "operator.shift-factorization",
    "operator.pushthrough",
    "operator.full-expansion",
    "operator.bell-expression",
)


def report_line(number, title, ok, detail):
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


@pytest.fixture(scope="module")
def default_run():
    cfg = SuiteConfig()
    t0 = time.perf_counter()
    reports = run_suite(cfg)
    wall = time.perf_counter() - t0
    return cfg, {r.identity_id: r for r in reports}, reports, wall


def group(reports, ids):
    chosen = [reports[i] for i in ids]
    failed = [r.identity_id for r in chosen if not r.passed]
    return chosen, failed, sum(r.elapsed for r in chosen)


def test_criterion_1_stirling_oracle(default_run):
    cfg, reports, _, _ = default_run
    rep = reports["stirling.recurrence-vs-oracle"]
    ok = rep.passed and cfg.stirling_n_max >= 12 and cfg.r_max >= 3 and cfg.r_stirling_n_max >= 10 and rep.elapsed < 1
    detail = f"{rep.checks} exact polynomial comparisons, n<=12, r<=3 n<=10, {rep.elapsed:.2f}s"
    assert report_line(1, "recurrence equals basis-conversion oracle", ok, detail), rep.counterexample


def test_criterion_2_egf(default_run):
    cfg, reports, _, _ = default_run
    chosen, failed, elapsed = group(reports, EGF_IDS)
    ok = not failed and cfg.egf_n_max >= 10 and all(r.samples_run >= 25 for r in chosen) and elapsed < 10
    detail = f"{sum(r.checks for r in chosen)} checks, n<=10, {chosen[0].samples_run} samples, {elapsed:.2f}s"
    assert report_line(2, "finite sums equal generating-function coefficients", ok, detail), failed


def test_criterion_3_classical(default_run):
    _, reports, _, _ = default_run
    rep = reports["classical.enumeration"]
    from degbell.families import classical_bell, classical_fubini

    bell = [classical_bell(n, 1) for n in range(9)]
    fubini = [classical_fubini(n, 1) for n in range(5)]
    ok = (
        rep.passed
        and bell == [1, 1, 2, 5, 15, 52, 203, 877, 4140]
        and fubini == [1, 1, 3, 13, 75]
        and rep.elapsed < 1
    )
    detail = f"Bell {[int(b) for b in bell]}, Fubini {[int(f) for f in fubini]} against enumeration, {rep.elapsed:.2f}s"
    assert report_line(3, "lambda = 0 regression", ok, detail), rep.counterexample


def test_criterion_4_spivey(default_run):
    cfg, reports, _, _ = default_run
    chosen, failed, elapsed = group(reports, SPIVEY_IDS)
    sampled = [r for r in chosen if r.identity_id != "spivey.bell-numbers"]
    ok = (
        not failed
        and cfg.classical_max >= 8
        and cfg.n_max >= 6
        and cfg.m_max >= 6
        and cfg.r_max >= 3
        and all(r.samples_run - r.skipped >= 50 for r in sampled)
        and elapsed < 60
    )
    detail = f"{sum(r.checks for r in chosen)} checks over {len(chosen)} recurrences, {elapsed:.1f}s"
    assert report_line(4, "Spivey-type recurrences", ok, detail), failed


def test_criterion_5_operators(default_run):
    cfg, reports, _, _ = default_run
    chosen, failed, elapsed = group(reports, OPERATOR_IDS)
    ok = (
        not failed
        and cfg.order >= 24
        and cfg.dobinski_n_max >= 8
        and all(r.samples_run >= 25 for r in chosen)
        and elapsed < 30
    )
    detail = f"{sum(r.checks for r in chosen)} checks on monomials/series to order {cfg.order}, {elapsed:.1f}s"
    assert report_line(5, "operator identities", ok, detail), failed


def dobinski_grid():
    lams = [Fraction(v) for v in ("0", "1/2", "-1/2", "1/3", "-1/3", "1/4", "-1/4", "1/10", "-1/10")]
    xs = [Fraction(v) for v in ("1/2", "-1/2", "1", "-1", "3/2", "-3/2", "2", "-2")]
    for lam in lams:
        for x in xs:
            if abs(lam * x) > Fraction(1, 2):
                continue
            for y in (Fraction(1), Fraction(3, 2), Fraction(-1, 2)):
                for r in range(4):
                    for n in range(9):
                        yield FamilyParams(n=n, lam=lam, x=x, y=y, r=r)


def test_criterion_6_dobinski(default_run):
    cfg, reports, _, _ = default_run
    rep = reports["dobinski.formal-series"]
    series_ok = rep.passed and rep.samples_run >= 25 and cfg.order >= 24 and rep.elapsed < 30
    # Double precision cannot resolve a sum whose terms cancel by more than
    # about 1e6; those points are counted but not held to 1e-9.
    worst, checked, ill, bad = 0.0, 0, 0, []
    for params in dobinski_grid():
        trace = dobinski_float(params, K=200, tolerance=1e-9)
        if trace.condition > 1e6:
            ill += 1
            continue
        checked += 1
        worst = max(worst, trace.rel_delta)
        if not trace.converged:
            bad.append(params)
    ok = series_ok and not bad
    detail = (
        f"formal series {rep.checks} checks {rep.elapsed:.1f}s; float demo K=200 on {checked} points "
        f"with |lam x|<=1/2, worst rel delta {worst:.1e} ({ill} ill-conditioned points not held to 1e-9)"
    )
    assert report_line(6, "Dobinski-type formula", ok, detail), bad[:3]


def test_criterion_7_mutation():
    t0 = time.perf_counter()
    reports = {r.identity_id: r for r in run_suite(SuiteConfig(mutation="stirling-sign"))}
    wall = time.perf_counter() - t0
    needed = {
        1: ("stirling.recurrence-vs-oracle",),
        2: EGF_IDS,
        4: SPIVEY_IDS,
    }
    caught = {
        c: [i for i in ids if not reports[i].passed and reports[i].counterexample is not None]
        for c, ids in needed.items()
    }
    ok = all(caught.values()) and wall < 60
    detail = ", ".join(f"criterion {c} fails via {v[0] if v else 'nothing'}" for c, v in caught.items())
    assert report_line(7, "sign-flip mutation is caught", ok, f"{detail}; {wall:.1f}s"), caught


def test_criterion_8_determinism(default_run, tmp_path):
    cfg, _, reports, _ = default_run
    first = suite_json(reports, cfg).encode()
    out = tmp_path / "report.json"
    with redirect_stdout(io.StringIO()), redirect_stderr(io.StringIO()):
        code = main(["verify", "--seed", str(cfg.seed), "--out", str(out)])
    second = out.read_bytes()
    ok = code == 0 and first == second and json.loads(second)["status"] == "pass"
    detail = f"two seed-{cfg.seed} runs, {len(second)} bytes, identical={first == second}"
    assert report_line(8, "byte-identical verify reports", ok, detail)
