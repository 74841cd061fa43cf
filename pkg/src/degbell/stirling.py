"""Degenerate Stirling numbers of the second kind and their r-shifted variant.

The production path is the triangle recurrence

    S(n+1, k) = S(n, k-1) + (k + r - n*lam) * S(n, k)

obtained from (x+r)_{n+1,lam} = (x+r)_{n,lam} (x + r - n*lam) together with
(x)_k * x = (x)_{k+1} + k (x)_k.  The test path (``*_oracle``) expands the
degenerate falling factorial in powers of x and converts powers to falling
factorials with the explicit alternating-sum formula for classical Stirling
numbers; it shares no code with the recurrence.

``lam`` is either a rational or :data:`SYMBOLIC`, in which case entries are
:class:`~degbell.exact.LambdaPoly` values.
"""

from __future__ import annotations

import contextlib
import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .exact import LambdaPoly, Scalar

__all__ = [
    "SYMBOLIC",
    "RStirlingTriangle",
    "StirlingTriangle",
    "classical_stirling2",
    "deg_r_stirling2",
    "deg_r_stirling2_oracle",
    "deg_stirling2",
    "deg_stirling2_oracle",
    "flipped_lambda_sign",
    "triangle",
]


class _Symbolic:
    def __repr__(self):
        return "SYMBOLIC"


SYMBOLIC = _Symbolic()

Entry = Union[Fraction, LambdaPoly]

# Sign in front of the lambda term of the recurrence. Only ever flipped by
# ``flipped_lambda_sign`` for mutation testing.
_lambda_sign = 1


def _lam_value(lam) -> Entry:
    if lam is SYMBOLIC:
        return LambdaPoly.variable()
    return Fraction(lam)


def _one(lam) -> Entry:
    return LambdaPoly([1]) if lam is SYMBOLIC else Fraction(1)


def _zero(lam) -> Entry:
    return LambdaPoly() if lam is SYMBOLIC else Fraction(0)


class RStirlingTriangle:
    """Append-only memo of rows {n+r, k+r}_{r,lam}, 0 <= k <= n.

    Row extension is guarded by a lock; reading finished rows is lock-free.
    """

    def __init__(self, lam, r: int = 0):
        if r < 0:
            raise ValueError("r must be >= 0")
        self.lam = lam if lam is SYMBOLIC else Fraction(lam)
        self.r = r
        self.rows: list[list[Entry]] = [[_one(self.lam)]]
        self._lock = threading.Lock()

    def _extend(self, n: int):
        with self._lock:
            lam = _lam_value(self.lam)
            sign = _lambda_sign
            while len(self.rows) <= n:
                m = len(self.rows) - 1
                prev = self.rows[m]
                row = []
                for k in range(m + 2):
                    left = prev[k - 1] if k >= 1 else _zero(self.lam)
                    here = prev[k] if k <= m else _zero(self.lam)
                    row.append(left + (k + self.r - sign * m * lam) * here)
                self.rows.append(row)

    def row(self, n: int) -> list[Entry]:
        if n >= len(self.rows):
            self._extend(n)
        return self.rows[n]

    def __call__(self, n: int, k: int) -> Entry:
        if n < 0 or k < 0 or k > n:
            return _zero(self.lam)
        return self.row(n)[k]


class StirlingTriangle(RStirlingTriangle):
    def __init__(self, lam):
        super().__init__(lam, 0)


_triangles: dict = {}
_triangles_lock = threading.Lock()


def triangle(lam, r: int = 0) -> RStirlingTriangle:
    """Shared memoized triangle for (lam, r)."""
    key = ("sym" if lam is SYMBOLIC else Fraction(lam), r)
    tri = _triangles.get(key)
    if tri is None:
        with _triangles_lock:
            tri = _triangles.get(key)
            if tri is None:
                tri = StirlingTriangle(lam) if r == 0 else RStirlingTriangle(lam, r)
                _triangles[key] = tri
    return tri


@contextlib.contextmanager
def flipped_lambda_sign():
    """Run with the lambda term of the recurrence sign-flipped (mutation test)."""
    global _lambda_sign
    with _triangles_lock:
        _triangles.clear()
        _lambda_sign = -1
    try:
        yield
    finally:
        with _triangles_lock:
            _triangles.clear()
            _lambda_sign = 1


def deg_stirling2(n: int, k: int, lam) -> Entry:
    return triangle(lam)(n, k)


def deg_r_stirling2(n: int, k: int, r: int, lam) -> Entry:
    """{n+r, k+r}_{r,lam}."""
    return triangle(lam, r)(n, k)


@lru_cache(maxsize=None)
def classical_stirling2(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    if n == 0:
        return 1
    if k == 0:
        return 0
    return classical_stirling2(n - 1, k - 1) + k * classical_stirling2(n - 1, k)


def _stirling2_explicit(n: int, k: int) -> int:
    total = sum((-1) ** (k - i) * math.comb(k, i) * i**n for i in range(k + 1))
    return total // math.factorial(k)


def _falling_in_powers(shift: Scalar, n: int, lam) -> list[Entry]:
    """Coefficients in x of (x + shift)_{n,lam}, lowest degree first."""
    lv = _lam_value(lam)
    poly = [_one(lam)]
    for i in range(n):
        const = shift - i * lv
        nxt = [_zero(lam)] * (len(poly) + 1)
        for d, c in enumerate(poly):
            nxt[d] = nxt[d] + c * const
            nxt[d + 1] = nxt[d + 1] + c
        poly = nxt
    return poly


def _powers_to_falling(poly: list[Entry], lam) -> list[Entry]:
    row = [_zero(lam)] * len(poly)
    for i, c in enumerate(poly):
        for k in range(i + 1):
            s = _stirling2_explicit(i, k)
            if s:
                row[k] = row[k] + c * s
    return row


def deg_stirling2_oracle(n: int, lam) -> list[Entry]:
    """Row [{n,0}_lam, ..., {n,n}_lam] by direct basis conversion."""
    return _powers_to_falling(_falling_in_powers(0, n, lam), lam)


def deg_r_stirling2_oracle(n: int, r: int, lam) -> list[Entry]:
    """Row [{n+r, k+r}_{r,lam}]_k from expanding (x+r)_{n,lam} in falling factorials (x)_k."""
    return _powers_to_falling(_falling_in_powers(r, n, lam), lam)
