"""Identity harness: every recurrence, generating function, Dobinski-like and
operator identity restated as an exact rational equality over parameter samples.

Two-variable identities are checked on the normalized values
beta = e_lam^{1-y}(x) B (see :mod:`degbell.families`).  Substituting
B_k(x, y') = e_lam^{y'-1}(x) beta_k(x, y') into the Spivey-type recurrence and
using e_lam^{-j lam}(x) = (1 + lam x)^{-j}, the factor e_lam^{y-1}(x) cancels and
each x^j turns into u^j with u = x/(1 + lam x):

    beta_{n+m}(x, y) = sum_j sum_k {m,j}_lam C(n,k) (j - m lam)_{n-k,lam}
                       (y)_{j,lam} u^j beta_k(x, y - j lam)

and the same with r-Stirling numbers for the r-variant.  The Dobinski-like and
operator forms are multiplied through by e_lam^y(x) and compared as power
series in x.
"""

from __future__ import annotations

import json
import math
import random
import time
from dataclasses import asdict, dataclass, fields
from functools import lru_cache
from fractions import Fraction
from typing import Callable, Optional

from . import combinat
from .exact import binomial, deg_falling
from .families import (
    classical_bell,
    classical_fubini,
    classical_r_bell,
    deg_bell_phi,
    fully_deg_B,
    fully_deg_bel,
    normalizer,
    r_B_norm,
    two_var_deg_fubini,
    two_var_deg_fubini_row,
)
from .operators import (
    beta_series,
    check_op_full_expansion,
    check_op_pushthrough,
    check_op_shift_factorization,
    check_op_stirling_expansion,
    operator_bell,
    xd_falling,
    xd_falling_composed,
)
from .report import IdentityReport
from .series import (
    DEFAULT_ORDER,
    TruncSeries,
    deg_exp_series,
    egf_coeff,
    exp_series,
    series_compose,
    series_exp,
    series_power,
)
from .stirling import (
    SYMBOLIC,
    classical_stirling2,
    deg_r_stirling2_oracle,
    deg_stirling2_oracle,
    flipped_lambda_sign,
    triangle,
)

LAMBDA_POOL = tuple(Fraction(v) for v in ("1", "-1", "1/2", "-1/2", "1/3", "-1/3", "2", "5/7"))

MUTATIONS = ("stirling-sign",)


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ParamSample:
    lam: Fraction
    x: Fraction
    y: Fraction
    n: int
    m: int
    r: int
    seed: int
    index: int = 0

    def as_dict(self) -> dict:
        return {
            "index": self.index,
            "lambda": self.lam,
            "x": self.x,
            "y": self.y,
            "n": self.n,
            "m": self.m,
            "r": self.r,
            "seed": self.seed,
        }


def _small_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        v = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if v or not nonzero:
            return v


def draw_samples(seed: int, count: int, n_max: int = 6, m_max: int = 6, r_max: int = 3) -> list[ParamSample]:
    """Deterministic samples with 1 + lam*x != 0; pole draws are redrawn."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        if rng.random() < 0.5:
            lam = rng.choice(LAMBDA_POOL)
        else:
            lam = _small_rational(rng, nonzero=True)
        x = _small_rational(rng)
        y = _small_rational(rng)
        n, m, r = rng.randint(0, n_max), rng.randint(0, m_max), rng.randint(0, r_max)
        if 1 + lam * x == 0:
            continue
        out.append(ParamSample(lam, x, y, n, m, r, seed, len(out)))
    return out


def _timed(fn: Callable[..., IdentityReport]) -> Callable[..., IdentityReport]:
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - t0
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# --- falling factorials and Stirling numbers -------------------------------------------


@_timed
def verify_vandermonde(samples: list[ParamSample], n_max: int = 12) -> IdentityReport:
    rep = IdentityReport("falling.vandermonde", samples_run=len(samples))
    for s in samples:
        ctx = {"sample": s.as_dict()}
        for n in range(n_max + 1):
            rhs = sum(
                (binomial(n, l) * deg_falling(s.x, l, s.lam) * deg_falling(s.y, n - l, s.lam) for l in range(n + 1)),
                Fraction(0),
            )
            rep.record(deg_falling(s.x + s.y, n, s.lam), rhs, n=n, **ctx)
    return rep


@_timed
def verify_stirling_oracle(n_max: int = 12, r_max: int = 3, r_n_max: int = 10) -> IdentityReport:
    """Triangle recurrence against basis conversion, symbolic in lambda."""
    rep = IdentityReport("stirling.recurrence-vs-oracle", samples_run=1)
    for n in range(n_max + 1):
        row = triangle(SYMBOLIC).row(n)
        oracle = deg_stirling2_oracle(n, SYMBOLIC)
        for k in range(n + 1):
            rep.record(row[k], oracle[k], n=n, k=k, r=0)
    for r in range(1, r_max + 1):
        for n in range(r_n_max + 1):
            row = triangle(SYMBOLIC, r).row(n)
            oracle = deg_r_stirling2_oracle(n, r, SYMBOLIC)
            for k in range(n + 1):
                rep.record(row[k], oracle[k], n=n, k=k, r=r)
    return rep


# --- generating functions --------------------------------------------------------------


def _e_minus_one(lam, N) -> TruncSeries:
    return deg_exp_series(1, lam, N) - 1


@_timed
def verify_egf_stirling(samples: list[ParamSample], n_max: int = 10, r_max: int = 3) -> IdentityReport:
    """(e_lam(t) - 1)^k e_lam^r(t) / k! generates the (r-)Stirling column k."""
    rep = IdentityReport("egf.stirling", samples_run=len(samples))
    for s in samples:
        ctx = {"sample": s.as_dict()}
        base = _e_minus_one(s.lam, n_max)
        for r in range(r_max + 1):
            tri = triangle(s.lam, r)
            er = deg_exp_series(r, s.lam, n_max)
            power = TruncSeries.constant(1, n_max)
            for k in range(n_max + 1):
                col = power * er * Fraction(1, math.factorial(k))
                for n in range(k, n_max + 1):
                    rep.record(egf_coeff(col, n), tri(n, k), n=n, k=k, r=r, **ctx)
                power = power * base
    return rep


def normalized_bell_egf(lam, x, y, r: int, N: int) -> TruncSeries:
    """((1 + lam x e_lam(t)) / (1 + lam x))^{y/lam} e_lam^r(t); at lam = 0, e^{xy(e^t-1)} e^{rt}.

    This is e_lam^{1-y}(x) times the defining generating function
    e_lam^{-1}(x) e_lam^y(x e_lam(t)) e_lam^r(t).
    """
    lam, x, y = Fraction(lam), Fraction(x), Fraction(y)
    er = deg_exp_series(r, lam, N)
    if lam == 0:
        return series_exp(x * y * (exp_series(N) - 1)) * er
    w = (1 + lam * x * deg_exp_series(1, lam, N)) * (1 / (1 + lam * x))
    return series_power(w, y / lam) * er


@_timed
def verify_egf_bell(samples: list[ParamSample], n_max: int = 10, r_max: int = 3) -> IdentityReport:
    """Finite sums of Bel, B, B(x,y), B^(r)(x), B^(r)(x,y) against their generating functions."""
    rep = IdentityReport("egf.bell-families", samples_run=len(samples))
    for s in samples:
        ctx = {"sample": s.as_dict()}
        # Bel: e_lam(x (e_lam(t) - 1))
        bel = series_compose(deg_exp_series(1, s.lam, n_max, var="u"), s.x * _e_minus_one(s.lam, n_max))
        for n in range(n_max + 1):
            rep.record(fully_deg_bel(n, s.lam, s.x), egf_coeff(bel, n), family="Bel", n=n, **ctx)
        for y, r, family in ((1, 0, "B"), (s.y, 0, "B(x,y)"), (1, s.r, "B^(r)"), (s.y, s.r, "B^(r)(x,y)")):
            g = normalized_bell_egf(s.lam, s.x, y, r, n_max)
            for n in range(n_max + 1):
                lhs = fully_deg_B(n, s.lam, s.x) if family == "B" else r_B_norm(n, s.lam, s.x, y, r)
                rep.record(lhs, egf_coeff(g, n), family=family, n=n, y=y, r=r, **ctx)
    return rep


# --- classical regression ---------------------------------------------------------------


@_timed
def verify_classical_regression(bell_max: int = 8, fubini_max: int = 4) -> IdentityReport:
    """lam = 0 evaluators against exhaustive partition enumeration."""
    rep = IdentityReport("classical.enumeration", samples_run=1)
    for n in range(bell_max + 1):
        count = combinat.count_partitions(n)
        rep.record(classical_bell(n, 1), count, family="phi", n=n)
        rep.record(fully_deg_B(n, 0, 1), count, family="B at lam=0", n=n)
        rep.record(fully_deg_bel(n, 0, 1), count, family="Bel at lam=0", n=n)
        rep.record(deg_bell_phi(n, 0, 1), count, family="phi_lam at lam=0", n=n)
    for n in range(fubini_max + 1):
        count = combinat.count_ordered_partitions(n)
        rep.record(classical_fubini(n, 1), count, family="F", n=n)
        rep.record(two_var_deg_fubini(n, 1, 0, 1, 0), count, family="F^(1)(x,0) at lam=0", n=n)
    return rep


# --- Spivey-type recurrences -------------------------------------------------------------


@_timed
def verify_spivey_classical(n_max: int = 8, m_max: int = 8) -> IdentityReport:
    """phi_{n+m} = sum_k sum_j j^{n-k} {m,j} C(n,k) phi_k, with 0^0 = 1."""
    rep = IdentityReport("spivey.bell-numbers", samples_run=1)
    bell = [classical_bell(n, 1) for n in range(n_max + m_max + 1)]
    for n in range(n_max + 1):
        for m in range(m_max + 1):
            rhs = sum(
                j ** (n - k) * classical_stirling2(m, j) * math.comb(n, k) * bell[k]
                for k in range(n + 1)
                for j in range(m + 1)
            )
            rep.record(bell[n + m], rhs, n=n, m=m)
    return rep


@_timed
def verify_spivey_deg_phi(samples: list[ParamSample], n_max: int = 6, m_max: int = 6) -> IdentityReport:
    rep = IdentityReport("spivey.degenerate-bell", samples_run=len(samples))
    for s in samples:
        lam, x = s.lam, s.x
        ctx = {"sample": s.as_dict()}
        tri = triangle(lam)
        phi = [deg_bell_phi(i, lam, x) for i in range(n_max + m_max + 1)]
        for n in range(n_max + 1):
            for m in range(m_max + 1):
                rhs = sum(
                    (
                        binomial(n, l) * tri(m, k) * deg_falling(k - m * lam, n - l, lam) * x**k * phi[l]
                        for k in range(m + 1)
                        for l in range(n + 1)
                    ),
                    Fraction(0),
                )
                rep.record(phi[n + m], rhs, n=n, m=m, **ctx)
    return rep


@_timed
def verify_spivey_bel_fubini(samples: list[ParamSample], n_max: int = 6, m_max: int = 6) -> IdentityReport:
    """Bel_{n+m} via order-k two-variable degenerate Fubini polynomials.

    The Fubini factor is F^{(k)}_{n-l,lam}(-lam x, k - m lam).
    """
    rep = IdentityReport("spivey.fully-degenerate-Bel-fubini", samples_run=len(samples))
    for s in samples:
        lam, x = s.lam, s.x
        ctx = {"sample": s.as_dict()}
        tri = triangle(lam)
        bel = [fully_deg_bel(i, lam, x) for i in range(n_max + m_max + 1)]
        # fub[m][k][d] = F^{(k)}_{d,lam}(-lam x, k - m lam)
        fub = [
            [two_var_deg_fubini_row(n_max, k, lam, -lam * x, k - m * lam) for k in range(m + 1)]
            for m in range(m_max + 1)
        ]
        for n in range(n_max + 1):
            for m in range(m_max + 1):
                rhs = Fraction(0)
                for k in range(m + 1):
                    outer = deg_falling(1, k, lam) * tri(m, k) * x**k
                    if outer:
                        row = fub[m][k]
                        rhs += outer * sum((binomial(n, l) * row[n - l] * bel[l] for l in range(n + 1)), Fraction(0))
                rep.record(bel[n + m], rhs, n=n, m=m, **ctx)
    return rep


class _SpiveyTables:
    """Precomputed pieces of the normalized Spivey-type right-hand side for one (lam, x, y, r)."""

    def __init__(self, lam, x, y, r: int, n_max: int, m_max: int):
        self.lam = lam
        u = normalizer(lam, x)
        tri = triangle(lam, r)
        # shifted[k][l] = beta^{(r)}_l(x, y - k lam)
        self.shifted = [[r_B_norm(l, lam, x, y - k * lam, r) for l in range(n_max + 1)] for k in range(m_max + 1)]
        # outer[m][k] = {m+r,k+r}_{r,lam} (y)_{k,lam} u^k
        self.outer = [[tri(m, k) * deg_falling(y, k, lam) * u**k for k in range(m + 1)] for m in range(m_max + 1)]
        self.lhs = [r_B_norm(i, lam, x, y, r) for i in range(n_max + m_max + 1)]

    def rhs(self, n: int, m: int) -> Fraction:
        lam = self.lam
        total = Fraction(0)
        for k, outer in enumerate(self.outer[m]):
            if not outer:
                continue
            shifted = self.shifted[k]
            total += outer * sum(
                (binomial(n, l) * deg_falling(k - m * lam, n - l, lam) * shifted[l] for l in range(n + 1)),
                Fraction(0),
            )
        return total


def _spivey_beta_rhs(n: int, m: int, lam, x, y, r: int) -> Fraction:
    return _SpiveyTables(lam, x, y, r, n, m).rhs(n, m)


@lru_cache(maxsize=None)
def _classical_values(x: Fraction, y: Fraction, r: int, top: int) -> tuple:
    return tuple(classical_r_bell(i, x, y, r) for i in range(top + 1))


def _spivey_classical_two_var(n: int, m: int, x, y, r: int) -> tuple[Fraction, Fraction]:
    """lam = 0 form via series-defined two-variable (r-)Bell values, with 0^0 = 1."""
    x, y = Fraction(x), Fraction(y)
    tri = triangle(0, r)
    phi = _classical_values(x, y, r, n + m)
    rhs = sum(
        (
            binomial(n, l) * tri(m, k) * k ** (n - l) * y**k * x**k * phi[l]
            for k in range(m + 1)
            for l in range(n + 1)
        ),
        Fraction(0),
    )
    return phi[n + m], rhs


def _pole_free(s: ParamSample) -> bool:
    return 1 + s.lam * s.x != 0


def _spivey_sweep(rep: IdentityReport, s: ParamSample, r: int, n_max: int, m_max: int, ctx: dict):
    for y, form in ((s.y, "two-variable"), (Fraction(1), "y=1")):
        tables = _SpiveyTables(s.lam, s.x, y, r, n_max, m_max)
        for n in range(n_max + 1):
            for m in range(m_max + 1):
                lhs = tables.lhs[n + m]
                if form == "y=1" and r == 0:
                    # no prefactor exists at y = 1: compare against the one-variable evaluator
                    lhs = fully_deg_B(n + m, s.lam, s.x)
                rep.record(lhs, tables.rhs(n, m), form=form, r=r, n=n, m=m, **ctx)


def _classical_sweep(rep: IdentityReport, s: ParamSample, r: int, top: int, ctx: dict):
    for n in range(top + 1):
        for m in range(top + 1):
            lhs, rhs = _spivey_classical_two_var(n, m, s.x, s.y, r)
            rep.record(lhs, rhs, form="lam=0 two-variable", r=r, n=n, m=m, **ctx)
            lhs, rhs = _spivey_classical_two_var(n, m, s.x, 1, r)
            rep.record(lhs, rhs, form="lam=0 one-variable", r=r, n=n, m=m, **ctx)


@_timed
def verify_spivey_B(samples: list[ParamSample], n_max: int = 6, m_max: int = 6, classical_max: int = 4) -> IdentityReport:
    """Spivey-type recurrence for B_{n,lam}(x, y), its y = 1 corollary and the lam = 0 limit."""
    rep = IdentityReport("spivey.two-var-B", samples_run=len(samples))
    for s in samples:
        if not _pole_free(s):
            rep.skipped += 1
            continue
        ctx = {"sample": s.as_dict()}
        _spivey_sweep(rep, s, 0, n_max, m_max, ctx)
        _classical_sweep(rep, s, 0, classical_max, ctx)
    return rep


@_timed
def verify_spivey_B_r(
    samples: list[ParamSample], n_max: int = 6, m_max: int = 6, r_max: int = 3, classical_max: int = 4
) -> IdentityReport:
    """Spivey-type recurrence for the r-variants, for every r <= r_max, plus the lam = 0 limit."""
    rep = IdentityReport("spivey.two-var-r-B", samples_run=len(samples))
    for s in samples:
        if not _pole_free(s):
            rep.skipped += 1
            continue
        ctx = {"sample": s.as_dict()}
        for r in range(r_max + 1):
            _spivey_sweep(rep, s, r, n_max, m_max, ctx)
        _classical_sweep(rep, s, s.r, classical_max, ctx)
    return rep


# --- Dobinski-like formulas and operator expressions ----------------------------------------


def dobinski_series(n: int, lam, y, r: int, N: int) -> TruncSeries:
    """sum_k (y)_{k,lam} (r+k)_{n,lam} x^k / k! truncated at x^N."""
    return TruncSeries(
        [deg_falling(y, k, lam) * deg_falling(r + k, n, lam) / math.factorial(k) for k in range(N + 1)],
        order=N,
        var="x",
    )


def _record_series(rep: IdentityReport, lhs: TruncSeries, rhs: TruncSeries, **context):
    bad = lhs.first_mismatch(rhs)
    if bad is None:
        rep.record(True, True)
    else:
        rep.record(lhs.coeffs[bad], rhs.coeffs[bad], coefficient=bad, **context)


@_timed
def verify_dobinski(samples: list[ParamSample], N: int = DEFAULT_ORDER, n_max: int = 8, r_max: int = 3) -> IdentityReport:
    """e_lam^y(x) beta^{(r)}_n(x, y) = sum_k (y)_{k,lam} (r+k)_{n,lam} x^k / k! as series in x."""
    rep = IdentityReport("dobinski.formal-series", samples_run=len(samples))
    for s in samples:
        ctx = {"sample": s.as_dict()}
        for y in (Fraction(1), s.y):
            ey = deg_exp_series(y, s.lam, N, var="x")
            for r in range(r_max + 1):
                for n in range(n_max + 1):
                    _record_series(
                        rep, ey * beta_series(n, s.lam, y, r, N), dobinski_series(n, s.lam, y, r, N), y=y, r=r, n=n, **ctx
                    )
    # lam -> 0 with y = 1, r = 0: e^x phi_n(x) = sum_k k^n x^k / k!
    ex = exp_series(N, var="x")
    for n in range(n_max + 1):
        phi = TruncSeries([classical_stirling2(n, k) for k in range(n + 1)], order=N, var="x")
        classical = TruncSeries([Fraction(k**n, math.factorial(k)) for k in range(N + 1)], order=N, var="x")
        _record_series(rep, ex * phi, classical, form="classical Dobinski", n=n)
    return rep


@_timed
def verify_operator_theorems(
    samples: list[ParamSample], N: int = DEFAULT_ORDER, n_max: int = 8, r_max: int = 3
) -> IdentityReport:
    """(XD + r)_{n,lam} e_lam^y(x) = beta^{(r)}_n(x, y) e_lam^y(x), and fast vs composed operators."""
    rep = IdentityReport("operator.bell-expression", samples_run=len(samples))
    for s in samples:
        ctx = {"sample": s.as_dict()}
        for y in (Fraction(1), s.y):
            ey = deg_exp_series(y, s.lam, N, var="x")
            for r in range(r_max + 1):
                for n in range(n_max + 1):
                    _record_series(
                        rep, operator_bell(n, s.lam, y, r, N), beta_series(n, s.lam, y, r, N) * ey, y=y, r=r, n=n, **ctx
                    )
        n, r = min(s.n, n_max), s.r
        fast, slow = xd_falling(n, s.lam, r), xd_falling_composed(n, s.lam, r)
        g = deg_exp_series(s.y, s.lam, N, var="x")
        _record_series(rep, fast(g), slow(g), form="diagonal vs composed", n=n, r=r, **ctx)
    # lam = 0: (XD)_n e^x = phi_n(x) e^x
    ex = exp_series(N, var="x")
    for n in range(n_max + 1):
        phi = TruncSeries([classical_stirling2(n, k) for k in range(n + 1)], order=N, var="x")
        _record_series(rep, xd_falling(n, 0)(ex), phi * ex, form="classical", n=n)
    return rep


def verify_operator_identities(samples: list[ParamSample], N: int = DEFAULT_ORDER, small: int = 3) -> list[IdentityReport]:
    """Normal-ordering identities for XD-falling operators on monomials x^0..x^N.

    Every sample checks one (n, m, r) triple drawn from the sample; the first
    sample additionally sweeps a full small grid.
    """
    t0 = time.perf_counter()
    reps = {
        "operator.stirling-expansion": IdentityReport("operator.stirling-expansion"),
        "operator.shift-factorization": IdentityReport("operator.shift-factorization"),
        "operator.pushthrough": IdentityReport("operator.pushthrough"),
        "operator.full-expansion": IdentityReport("operator.full-expansion"),
    }
    for rep in reps.values():
        rep.samples_run = len(samples)

    def run(n, m, k, r, lam, sample):
        for sub in (
            check_op_stirling_expansion(n + m, lam, N),
            check_op_shift_factorization(n, m, lam, N, r),
            check_op_pushthrough(n, m, k, lam, r, N),
            check_op_full_expansion(n, m, lam, r, N),
        ):
            target = reps[sub.identity_id if sub.identity_id in reps else "operator.pushthrough"]
            if sub.counterexample is not None:
                sub.counterexample["sample"] = sample.as_dict()
            target.merge(sub)

    for s in samples:
        run(min(s.n, small), min(s.m, small), s.n % (small + 1), s.r, s.lam, s)
    if samples:
        s = samples[0]
        for n in range(small + 1):
            for m in range(small + 1):
                run(n, m, (n + m) % (small + 1), m % 4, s.lam, s)
    elapsed = (time.perf_counter() - t0) / len(reps)
    for rep in reps.values():
        rep.elapsed = elapsed
    return [reps[k] for k in sorted(reps)]


# --- suite --------------------------------------------------------------------------------


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    samples: int = 50
    egf_samples: int = 25
    op_samples: int = 25
    n_max: int = 6
    m_max: int = 6
    r_max: int = 3
    classical_max: int = 8
    egf_n_max: int = 10
    stirling_n_max: int = 12
    r_stirling_n_max: int = 10
    dobinski_n_max: int = 8
    order: int = DEFAULT_ORDER
    mutation: Optional[str] = None

    def validate(self) -> "SuiteConfig":
        for f in fields(self):
            v = getattr(self, f.name)
            if f.name == "mutation":
                if v is not None and v not in MUTATIONS:
                    raise ConfigError(f"unknown mutation {v!r}")
            elif not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ConfigError(f"{f.name} must be a non-negative integer, got {v!r}")
        if self.order < max(self.dobinski_n_max, 1):
            raise ConfigError("truncation order must cover the Dobinski index range")
        if self.samples < 1:
            raise ConfigError("at least one sample is required")
        return self


def _run(cfg: SuiteConfig) -> list[IdentityReport]:
    pool = draw_samples(
        cfg.seed, max(cfg.samples, cfg.egf_samples, cfg.op_samples), cfg.n_max, cfg.m_max, cfg.r_max
    )
    spivey = pool[: cfg.samples]
    egf = pool[: cfg.egf_samples]
    ops = pool[: cfg.op_samples]
    reports = [
        verify_vandermonde(egf),
        verify_stirling_oracle(cfg.stirling_n_max, cfg.r_max, cfg.r_stirling_n_max),
        verify_egf_stirling(egf, cfg.egf_n_max, cfg.r_max),
        verify_egf_bell(egf, cfg.egf_n_max, cfg.r_max),
        verify_classical_regression(cfg.classical_max, 4),
        verify_spivey_classical(cfg.classical_max, cfg.classical_max),
        verify_spivey_deg_phi(spivey, cfg.n_max, cfg.m_max),
        verify_spivey_bel_fubini(spivey, cfg.n_max, cfg.m_max),
        verify_spivey_B(spivey, cfg.n_max, cfg.m_max),
        verify_spivey_B_r(spivey, cfg.n_max, cfg.m_max, cfg.r_max),
        verify_dobinski(ops, cfg.order, cfg.dobinski_n_max, cfg.r_max),
        verify_operator_theorems(ops, cfg.order, cfg.dobinski_n_max, cfg.r_max),
    ]
    reports.extend(verify_operator_identities(ops, cfg.order))
    return sorted(reports, key=lambda rep: rep.identity_id)


def run_suite(config: Optional[SuiteConfig] = None) -> list[IdentityReport]:
    """Run every identity check; deterministic for a fixed seed."""
    cfg = (config or SuiteConfig()).validate()
    if cfg.mutation == "stirling-sign":
        with flipped_lambda_sign():
            return _run(cfg)
    return _run(cfg)


def suite_json(reports: list[IdentityReport], config: Optional[SuiteConfig] = None, timings: bool = False) -> str:
    cfg = config or SuiteConfig()
    doc = {
        "config": {k: v for k, v in asdict(cfg).items()},
        "status": "pass" if all(r.passed for r in reports) else "fail",
        "reports": [r.to_json(timings=timings) for r in reports],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
