"""Finite-sum evaluation of the Bell- and Fubini-type families.

The two-variable families carry a factor e_lam^{y-1}(x) = (1 + lam*x)^{(y-1)/lam}
that is irrational at generic rational points.  Every ``*_norm`` evaluator
returns the value with that factor removed,

    beta^{(r)}_{n,lam}(x, y) = sum_k {n+r, k+r}_{r,lam} (y)_{k,lam} u^k,
    u = x / (1 + lam*x),

which is the polynomial value itself whenever y = 1.  The classical
two-variable Bell values are normalized the same way (the factor is e^{x(y-1)}).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exact import Scalar, deg_falling
from .series import (
    deg_exp_series,
    egf_coeff,
    exp_series,
    series_exp,
    series_reciprocal,
)
from .stirling import classical_stirling2, triangle

__all__ = [
    "FAMILIES",
    "DobinskiTrace",
    "FamilyParams",
    "NormalizedBellValue",
    "PoleError",
    "classical_bell",
    "classical_fubini",
    "classical_r_bell",
    "classical_two_var_bell",
    "deg_bell_phi",
    "dobinski_float",
    "dobinski_partial",
    "evaluate",
    "fully_deg_B",
    "fully_deg_bel",
    "normalizer",
    "r_B_norm",
    "two_var_B_norm",
    "two_var_deg_fubini",
    "two_var_deg_fubini_row",
]


class PoleError(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class FamilyParams:
    n: int
    lam: Fraction = Fraction(1)
    x: Fraction = Fraction(1)
    y: Fraction = Fraction(1)
    r: int = 0
    k: int = 1  # Fubini order

    def __post_init__(self):
        if self.n < 0 or self.r < 0 or self.k < 0:
            raise ValueError("n, r and k must be non-negative")
        for name in ("lam", "x", "y"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))


@dataclass(frozen=True)
class NormalizedBellValue:
    value: Fraction
    family: str
    params: FamilyParams
    omitted_prefactor: Optional[str] = None


def normalizer(lam: Scalar, x: Scalar) -> Fraction:
    """u = x / (1 + lam*x)."""
    lam, x = Fraction(lam), Fraction(x)
    den = 1 + lam * x
    if den == 0:
        raise PoleError(f"normalization pole: 1 + lam*x = 0 at lam={lam}, x={x}")
    return x / den


def classical_bell(n: int, x: Scalar) -> Fraction:
    x = Fraction(x)
    return sum((classical_stirling2(n, k) * x**k for k in range(n + 1)), Fraction(0))


def classical_fubini(n: int, x: Scalar) -> Fraction:
    x = Fraction(x)
    return sum(
        (classical_stirling2(n, k) * math.factorial(k) * x**k for k in range(n + 1)),
        Fraction(0),
    )


def deg_bell_phi(n: int, lam: Scalar, x: Scalar) -> Fraction:
    tri = triangle(lam)
    x = Fraction(x)
    return sum((tri(n, k) * x**k for k in range(n + 1)), Fraction(0))


def fully_deg_bel(n: int, lam: Scalar, x: Scalar) -> Fraction:
    """Bel_{n,lam}(x) = sum_k (1)_{k,lam} x^k {n,k}_lam."""
    tri = triangle(lam)
    x = Fraction(x)
    return sum(
        (deg_falling(1, k, lam) * x**k * tri(n, k) for k in range(n + 1)),
        Fraction(0),
    )


def r_B_norm(n: int, lam: Scalar, x: Scalar, y: Scalar = 1, r: int = 0) -> Fraction:
    u = normalizer(lam, x)
    tri = triangle(lam, r)
    return sum(
        (tri(n, k) * deg_falling(y, k, lam) * u**k for k in range(n + 1)),
        Fraction(0),
    )


def two_var_B_norm(n: int, lam: Scalar, x: Scalar, y: Scalar) -> Fraction:
    return r_B_norm(n, lam, x, y, 0)


def fully_deg_B(n: int, lam: Scalar, x: Scalar) -> Fraction:
    """B_{n,lam}(x) = sum_k (1)_{k,lam} (x/(1+lam x))^k {n,k}_lam; raises PoleError at 1+lam x = 0."""
    return r_B_norm(n, lam, x, 1, 0)


def two_var_deg_fubini_row(n_max: int, order_k: int, lam: Scalar, x: Scalar, y: Scalar) -> list[Fraction]:
    """[F^{(order_k)}_{n,lam}(x, y) for n = 0..n_max] from one generating-function expansion."""
    e1 = deg_exp_series(1, lam, n_max)
    base = 1 - Fraction(x) * (e1 - 1)
    s = series_reciprocal(base) ** order_k * deg_exp_series(y, lam, n_max)
    return [egf_coeff(s, n) for n in range(n_max + 1)]


def two_var_deg_fubini(n: int, order_k: int, lam: Scalar, x: Scalar, y: Scalar) -> Fraction:
    """n! [t^n] (1 - x(e_lam(t) - 1))^{-order_k} e_lam^y(t)."""
    return two_var_deg_fubini_row(n, order_k, lam, x, y)[n]


def classical_r_bell(n: int, x: Scalar, y: Scalar = 1, r: int = 0) -> Fraction:
    """Normalized phi^{(r)}_n(x, y) = n! [t^n] e^{xy(e^t - 1)} e^{rt}.

    The literal generating function e^{x(ye^t-1)} e^{rt} differs by the constant
    factor e^{x(y-1)}, which is dropped.
    """
    xy = Fraction(x) * Fraction(y)
    inner = xy * (exp_series(n) - 1)
    s = series_exp(inner) * deg_exp_series(r, 0, n)
    return egf_coeff(s, n)


def classical_two_var_bell(n: int, x: Scalar, y: Scalar) -> Fraction:
    return classical_r_bell(n, x, y, 0)


def dobinski_partial(n: int, lam: Scalar, x: Scalar, y: Scalar = 1, r: int = 0, K: int = 0) -> Fraction:
    """sum_{k=0}^{K} (y)_{k,lam} (r+k)_{n,lam} x^k / k!, without the 1/e_lam(x) factor."""
    x = Fraction(x)
    total = Fraction(0)
    for k in range(K + 1):
        total += deg_falling(y, k, lam) * deg_falling(r + k, n, lam) * x**k / math.factorial(k)
    return total


@dataclass
class DobinskiTrace:
    params: FamilyParams
    K: int
    partial_sums: list = field(default_factory=list)  # (k, float value incl. prefactor)
    value: float = 0.0
    exact: float = 0.0
    rel_delta: float = 0.0
    tolerance: float = 1e-9
    condition: float = 1.0  # sum |term| / |sum term|; double precision cannot beat ~condition * 1e-16

    @property
    def converged(self) -> bool:
        return self.rel_delta <= self.tolerance


def _deg_exp_float(a: float, lam: float, x: float) -> float:
    """e_lam^a(x) = (1 + lam x)^{a/lam} in double precision."""
    if lam == 0:
        return math.exp(a * x)
    return (1 + lam * x) ** (a / lam)


def dobinski_float(params: FamilyParams, K: int = 200, tolerance: float = 1e-9, every: int = 10) -> DobinskiTrace:
    """Floating-point partial sums of the Dobinski-like series, for demonstration.

    Requires |lam * x| < 1 so the series converges.
    """
    lam, x, y = float(params.lam), float(params.x), float(params.y)
    if abs(params.lam * params.x) >= 1:
        raise ValueError("domain guard: Dobinski demo needs |lam*x| < 1")
    pref = 1.0 / _deg_exp_float(1.0, lam, x)
    trace = DobinskiTrace(params=params, K=K, tolerance=tolerance)
    weight = 1.0  # (y)_{k,lam} x^k / k!
    total = 0.0
    comp = 0.0
    magnitude = 0.0
    for k in range(K + 1):
        if k:
            weight *= (y - (k - 1) * lam) * x / k
        term = weight * float(deg_falling(params.r + k, params.n, params.lam))
        magnitude += abs(term)
        # Kahan summation keeps alternating tails from eating the last digits.
        t = total + (term - comp)
        comp = (t - total) - (term - comp)
        total = t
        if k % every == 0 or k == K:
            trace.partial_sums.append((k, pref * total))
    trace.value = pref * total
    trace.condition = magnitude / abs(total) if total else math.inf
    beta = r_B_norm(params.n, params.lam, params.x, params.y, params.r)
    trace.exact = float(beta) * _deg_exp_float(y - 1, lam, x)
    scale = abs(trace.exact) if trace.exact != 0 else 1.0
    trace.rel_delta = abs(trace.value - trace.exact) / scale
    return trace


FAMILIES = {
    "bell": (lambda p: fully_deg_B(p.n, p.lam, p.x), None),
    "bell-two-var": (lambda p: two_var_B_norm(p.n, p.lam, p.x, p.y), "e_lambda^(y-1)(x)"),
    "bell-r": (lambda p: r_B_norm(p.n, p.lam, p.x, p.y, p.r), "e_lambda^(y-1)(x)"),
    "phi": (lambda p: classical_r_bell(p.n, p.x, p.y, p.r), "e^(x(y-1))"),
    "phi-deg": (lambda p: deg_bell_phi(p.n, p.lam, p.x), None),
    "bel": (lambda p: fully_deg_bel(p.n, p.lam, p.x), None),
    "fubini": (lambda p: two_var_deg_fubini(p.n, p.k, p.lam, p.x, p.y), None),
    "fubini-classical": (lambda p: classical_fubini(p.n, p.x), None),
}


def evaluate(family: str, params: FamilyParams) -> NormalizedBellValue:
    try:
        fn, prefactor = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    value = fn(params)
    if prefactor is not None and params.y == 1:
        prefactor = None
    return NormalizedBellValue(value=value, family=family, params=params, omitted_prefactor=prefactor)
