"""Exact scalars, binomials, degenerate falling factorials and polynomials in lambda.

Scalars are :class:`fractions.Fraction` throughout; they are kept in lowest
terms with a positive denominator by construction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]

__all__ = [
    "LambdaPoly",
    "Scalar",
    "binomial",
    "deg_falling",
    "deg_falling_sym",
    "falling",
    "format_rational",
    "parse_rational",
]


def binomial(n: int, k: int) -> Fraction:
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def deg_falling(x: Scalar, n: int, lam: Scalar) -> Fraction:
    """(x)_{n,lam} = x (x - lam) ... (x - (n-1) lam); equals x**n when lam == 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    x = Fraction(x)
    lam = Fraction(lam)
    out = Fraction(1)
    for i in range(n):
        out *= x - i * lam
    return out


def falling(x: Scalar, k: int) -> Fraction:
    """Ordinary falling factorial (x)_k."""
    return deg_falling(x, k, 1)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or a finite decimal literal into a Fraction."""
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational {text!r}") from exc
    return value


def format_rational(value: Scalar) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class LambdaPoly:
    """Dense univariate polynomial in lambda with Fraction coefficients.

    ``coeffs[i]`` is the coefficient of lambda**i. Trailing zeros are stripped,
    so two polynomials are equal exactly when their coefficient tuples are.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [Fraction(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def constant(cls, a: Scalar) -> "LambdaPoly":
        return cls([a])

    @classmethod
    def variable(cls) -> "LambdaPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree in lambda; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, lam: Scalar) -> Fraction:
        lam = Fraction(lam)
        out = Fraction(0)
        for a in reversed(self.coeffs):
            out = out * lam + a
        return out

    evaluate = __call__

    @staticmethod
    def _lift(other) -> "LambdaPoly":
        if isinstance(other, LambdaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LambdaPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return LambdaPoly([ai + (b[i] if i < len(b) else 0) for i, ai in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly([-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return LambdaPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LambdaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = LambdaPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"LambdaPoly({[format_rational(a) for a in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            mag = format_rational(abs(a))
            if i == 0:
                term = mag
            else:
                mono = "λ" if i == 1 else f"λ^{i}"
                term = mono if mag == "1" else f"{mag}{mono}"
            sign = "-" if a < 0 else "+"
            parts.append((sign, term))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f"{sign}{term}"
        return text

    def to_strings(self) -> list[str]:
        return [format_rational(a) for a in self.coeffs] or ["0"]


def deg_falling_sym(x: Scalar, n: int) -> LambdaPoly:
    """(x)_{n,lambda} with lambda left symbolic."""
    lam = LambdaPoly.variable()
    out = LambdaPoly([1])
    for i in range(n):
        out = out * (Fraction(x) - i * lam)
    return out
