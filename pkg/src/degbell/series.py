"""Truncated formal power series with exact rational coefficients.

Every series carries two orders: the truncation order ``order`` (how many
coefficients are stored) and ``valid`` (how many of those are known to be the
true coefficients of the represented function). Comparisons only look at the
valid prefix.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional

from .exact import Scalar, deg_falling

DEFAULT_ORDER = 24

__all__ = [
    "DEFAULT_ORDER",
    "SeriesError",
    "TruncSeries",
    "deg_exp_series",
    "egf_coeff",
    "exp_series",
    "series_add",
    "series_compose",
    "series_exp",
    "series_mul",
    "series_power",
    "series_reciprocal",
    "series_scale",
]


class SeriesError(ArithmeticError):
    pass


class TruncSeries:
    __slots__ = ("coeffs", "order", "valid", "var")

    def __init__(
        self,
        coeffs: Iterable[Scalar],
        order: Optional[int] = None,
        valid: Optional[int] = None,
        var: str = "t",
    ):
        c = [Fraction(a) for a in coeffs]
        if order is None:
            order = max(len(c) - 1, 0)
        if len(c) > order + 1:
            c = c[: order + 1]
        c.extend([Fraction(0)] * (order + 1 - len(c)))
        if valid is None:
            valid = order
        if not 0 <= valid <= order:
            raise ValueError(f"valid order {valid} outside 0..{order}")
        self.coeffs: tuple[Fraction, ...] = tuple(c)
        self.order = order
        self.valid = valid
        self.var = var

    @classmethod
    def constant(cls, a: Scalar, order: int = DEFAULT_ORDER, var: str = "t") -> "TruncSeries":
        return cls([a], order=order, var=var)

    @classmethod
    def monomial(cls, j: int, order: int = DEFAULT_ORDER, coeff: Scalar = 1, var: str = "t") -> "TruncSeries":
        if j > order:
            return cls([], order=order, var=var)
        return cls([0] * j + [coeff], order=order, var=var)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n] if n <= self.order else Fraction(0)

    def _check(self, other: "TruncSeries"):
        if self.var != other.var:
            raise SeriesError(f"variable mismatch: {self.var!r} vs {other.var!r}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncSeries.constant(other, self.order, self.var)
        return series_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return series_scale(self, -1)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncSeries.constant(other, self.order, self.var)
        return series_add(self, series_scale(other, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return series_scale(self, other)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return series_reciprocal(self) ** (-k)
        out = TruncSeries.constant(1, self.order, self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.first_mismatch(other) is None

    __hash__ = None

    def first_mismatch(self, other: "TruncSeries") -> Optional[int]:
        """Index of the first differing coefficient within the common valid range."""
        self._check(other)
        for i in range(min(self.valid, other.valid) + 1):
            if self.coeffs[i] != other.coeffs[i]:
                return i
        return None

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs, order=order, valid=min(self.valid, order), var=self.var)

    def __repr__(self):
        body = ", ".join(str(a) for a in self.coeffs[: self.valid + 1])
        return f"TruncSeries([{body}], order={self.order}, valid={self.valid}, var={self.var!r})"


def series_add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    a._check(b)
    order = min(a.order, b.order)
    return TruncSeries(
        [a.coeffs[i] + b.coeffs[i] for i in range(order + 1)],
        order=order,
        valid=min(a.valid, b.valid),
        var=a.var,
    )


def series_scale(a: TruncSeries, c: Scalar) -> TruncSeries:
    c = Fraction(c)
    return TruncSeries([c * x for x in a.coeffs], order=a.order, valid=a.valid, var=a.var)


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    a._check(b)
    order = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = [Fraction(0)] * (order + 1)
    for i in range(order + 1):
        ai = ac[i]
        if ai == 0:
            continue
        for j in range(order + 1 - i):
            out[i + j] += ai * bc[j]
    return TruncSeries(out, order=order, valid=min(a.valid, b.valid), var=a.var)


def series_reciprocal(a: TruncSeries) -> TruncSeries:
    a0 = a.coeffs[0]
    if a0 == 0:
        raise SeriesError("non-invertible series")
    inv0 = 1 / a0
    out = [inv0]
    for n in range(1, a.order + 1):
        s = sum((a.coeffs[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
        out.append(-s * inv0)
    return TruncSeries(out, order=a.order, valid=a.valid, var=a.var)


def series_compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    """outer(inner(t)); the result lives in inner's variable."""
    if inner.coeffs[0] != 0:
        raise SeriesError("inner series must have zero constant term")
    order = min(outer.order, inner.order)
    valid = min(outer.valid, inner.valid, order)
    inner = inner.truncate(order)
    # Horner from the top; terms of degree > order in outer cannot contribute.
    acc = TruncSeries.constant(outer.coeffs[order] if order <= outer.order else 0, order, inner.var)
    for k in range(order - 1, -1, -1):
        acc = acc * inner + outer.coeffs[k]
    return TruncSeries(acc.coeffs, order=order, valid=valid, var=inner.var)


def series_power(a: TruncSeries, alpha: Scalar) -> TruncSeries:
    """a**alpha for rational alpha, requiring constant term 1 (binomial branch)."""
    if a.coeffs[0] != 1:
        raise SeriesError("rational power needs constant term 1")
    alpha = Fraction(alpha)
    out = [Fraction(1)]
    for n in range(1, a.order + 1):
        s = Fraction(0)
        for k in range(1, n + 1):
            if a.coeffs[k]:
                s += ((alpha + 1) * k - n) * a.coeffs[k] * out[n - k]
        out.append(s / n)
    return TruncSeries(out, order=a.order, valid=a.valid, var=a.var)


def exp_series(order: int = DEFAULT_ORDER, var: str = "t") -> TruncSeries:
    return TruncSeries([Fraction(1, math.factorial(k)) for k in range(order + 1)], order=order, var=var)


def series_exp(a: TruncSeries) -> TruncSeries:
    """exp(a) for a series with zero constant term."""
    return series_compose(exp_series(a.order, "u"), a)


def deg_exp_series(y: Scalar, lam: Scalar, order: int = DEFAULT_ORDER, var: str = "t") -> TruncSeries:
    """Coefficients (y)_{k,lam}/k! of the degenerate exponential e_lam^y(t)."""
    return TruncSeries(
        [deg_falling(y, k, lam) / math.factorial(k) for k in range(order + 1)],
        order=order,
        var=var,
    )


def egf_coeff(s: TruncSeries, n: int) -> Fraction:
    if n > s.valid:
        raise SeriesError(f"insufficient truncation: need {n}, valid to {s.valid}")
    return math.factorial(n) * s.coeffs[n]
