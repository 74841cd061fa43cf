"""The operators X (multiply by x) and D (d/dx) acting on truncated series in x.

Two realizations exist for the degenerate falling operators (XD + c)_{n,lam}:
a diagonal one that scales x^j by (j + c)_{n,lam}, and a compositional one
built only from X, D and scalar shifts.  The second is the oracle for the first
and for every operator identity checked here.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .exact import Scalar, binomial, deg_falling
from .report import IdentityReport
from .series import DEFAULT_ORDER, SeriesError, TruncSeries, deg_exp_series
from .stirling import triangle

__all__ = [
    "D",
    "Composition",
    "Diagonal",
    "I",
    "LinearCombination",
    "SeriesOperator",
    "X",
    "apply_D",
    "apply_X",
    "beta_series",
    "check_op_full_expansion",
    "check_op_pushthrough",
    "check_op_shift_factorization",
    "check_op_stirling_expansion",
    "operator_bell",
    "xd_falling",
    "xd_falling_composed",
    "xk_dk",
]


_ZERO = Fraction(0)


def _series(coeffs: list, like: TruncSeries, valid: int) -> TruncSeries:
    s = TruncSeries.__new__(TruncSeries)
    s.coeffs = tuple(coeffs)
    s.order = like.order
    s.valid = valid
    s.var = like.var
    return s


def apply_X(f: TruncSeries) -> TruncSeries:
    return _series((_ZERO,) + f.coeffs[:-1], f, min(f.valid + 1, f.order))


def apply_D(f: TruncSeries) -> TruncSeries:
    if f.valid == 0:
        raise SeriesError("differentiation leaves no valid coefficients")
    c = f.coeffs
    out = [(j + 1) * a if a else a for j, a in enumerate(c[1:])]
    out.append(_ZERO)
    return _series(out, f, f.valid - 1)


class SeriesOperator:
    """Linear operator on TruncSeries; compose with ``@``, combine with ``+``/``-``/scalars."""

    def apply(self, f: TruncSeries) -> TruncSeries:
        raise NotImplementedError

    def __call__(self, f: TruncSeries) -> TruncSeries:
        return self.apply(f)

    def __matmul__(self, other: "SeriesOperator") -> "Composition":
        return Composition([self, other])

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other) * I
        return LinearCombination([(Fraction(1), self), (Fraction(1), other)])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other) * I
        return LinearCombination([(Fraction(1), self), (Fraction(-1), other)])

    def __rmul__(self, c):
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return LinearCombination([(Fraction(c), self)])

    def __pow__(self, k: int) -> "SeriesOperator":
        return Composition([self] * k) if k else I


class _Identity(SeriesOperator):
    def apply(self, f):
        return f

    def __repr__(self):
        return "I"


class _X(SeriesOperator):
    def apply(self, f):
        return apply_X(f)

    def __repr__(self):
        return "X"


class _D(SeriesOperator):
    def apply(self, f):
        return apply_D(f)

    def __repr__(self):
        return "D"


I = _Identity()
X = _X()
D = _D()


class Diagonal(SeriesOperator):
    """x^j -> weight(j) x^j."""

    def __init__(self, weight: Callable[[int], Fraction], label: str = "diag"):
        self.weight = weight
        self.label = label

    def apply(self, f):
        return _series([self.weight(j) * a if a else a for j, a in enumerate(f.coeffs)], f, f.valid)

    def __repr__(self):
        return f"Diagonal({self.label})"


class Composition(SeriesOperator):
    """Product A_1 A_2 ... A_k; the rightmost factor acts first."""

    def __init__(self, factors: Sequence[SeriesOperator]):
        flat = []
        for op in factors:
            flat.extend(op.factors if isinstance(op, Composition) else [op])
        self.factors = tuple(flat)

    def apply(self, f):
        for op in reversed(self.factors):
            f = op.apply(f)
        return f

    def __repr__(self):
        return "".join(map(repr, self.factors)) or "I"


class LinearCombination(SeriesOperator):
    def __init__(self, terms: Iterable[tuple[Fraction, SeriesOperator]]):
        self.terms = tuple((Fraction(c), op) for c, op in terms)

    def apply(self, f):
        out = None
        valid = f.order
        for c, op in self.terms:
            if c == 0:
                continue
            g = op.apply(f)
            valid = min(valid, g.valid)
            if out is None:
                out = [c * a if a else a for a in g.coeffs]
            else:
                out = [p + c * a if a else p for p, a in zip(out, g.coeffs)]
        if out is None:
            return _series([Fraction(0)] * (f.order + 1), f, f.valid)
        return _series(out, f, valid)

    def __repr__(self):
        return " + ".join(f"{c}*{op!r}" for c, op in self.terms)


XD = Composition([X, D])


def xd_falling(n: int, lam: Scalar, r: Scalar = 0) -> Diagonal:
    """(XD + r)_{n,lam} as the diagonal x^j -> (j + r)_{n,lam} x^j."""
    lam, r = Fraction(lam), Fraction(r)
    return Diagonal(lambda j: deg_falling(j + r, n, lam), f"(XD+{r})_{{{n},{lam}}}")


def xd_falling_composed(n: int, lam: Scalar, shift: Scalar = 0) -> SeriesOperator:
    """(XD + shift)(XD + shift - lam)...(XD + shift - (n-1)lam) from X, D and scalars."""
    lam, shift = Fraction(lam), Fraction(shift)
    return Composition([XD + (shift - i * lam) for i in range(n)]) if n else I


def xk_dk(k: int) -> SeriesOperator:
    return Composition([X] * k + [D] * k) if k else I


def monomials(order: int, var: str = "x") -> list[TruncSeries]:
    return [TruncSeries.monomial(j, order, var=var) for j in range(order + 1)]


def _compare_on_monomials(report: IdentityReport, lhs: SeriesOperator, rhs: SeriesOperator, N: int, **context):
    for j, mono in enumerate(monomials(N)):
        a, b = lhs(mono), rhs(mono)
        bad = a.first_mismatch(b)
        report.record(
            a.coeffs[bad] if bad is not None else None,
            b.coeffs[bad] if bad is not None else None,
            monomial_degree=j,
            coefficient=bad,
            **context,
        )


def check_op_stirling_expansion(n: int, lam: Scalar, N: int = DEFAULT_ORDER) -> IdentityReport:
    """(XD)_{n,lam} = sum_k {n,k}_lam X^k D^k on x^0..x^N."""
    report = IdentityReport("operator.stirling-expansion")
    tri = triangle(lam)
    rhs = LinearCombination([(tri(n, k), xk_dk(k)) for k in range(n + 1)])
    _compare_on_monomials(report, xd_falling_composed(n, lam), rhs, N, n=n, lam=Fraction(lam))
    return report


def check_op_shift_factorization(n: int, m: int, lam: Scalar, N: int = DEFAULT_ORDER, r: int = 0) -> IdentityReport:
    """(XD + r)_{n+m,lam} = (XD + r - m lam)_{n,lam} (XD + r)_{m,lam}."""
    lam = Fraction(lam)
    report = IdentityReport("operator.shift-factorization")
    lhs = xd_falling_composed(n + m, lam, r)
    rhs = xd_falling_composed(n, lam, r - m * lam) @ xd_falling_composed(m, lam, r)
    _compare_on_monomials(report, lhs, rhs, N, n=n, m=m, r=r, lam=lam)
    return report


def check_op_commutator_power(k: int, N: int = DEFAULT_ORDER) -> IdentityReport:
    """D X^k - X^k D = k X^{k-1}."""
    report = IdentityReport("operator.commutator-power")
    lhs = D @ X**k - X**k @ D
    rhs = k * X ** (k - 1) if k else Fraction(0) * I
    _compare_on_monomials(report, lhs, rhs, N, k=k)
    return report


def check_op_pushthrough(n: int, m: int, k: int, lam: Scalar, r: int = 0, N: int = DEFAULT_ORDER) -> IdentityReport:
    """Moving X^k through XD-polynomials.

    Checks (XD) X^k = X (D X^k) = X^k (XD + k) and
    (XD + r - m lam)_{n,lam} X^k = X^k (XD + r + k - m lam)_{n,lam}
        = X^k sum_l C(n,l) (XD + r)_{l,lam} (k - m lam)_{n-l,lam}.
    """
    lam = Fraction(lam)
    report = IdentityReport("operator.pushthrough")
    ctx = dict(n=n, m=m, k=k, r=r, lam=lam)
    Xk = X**k
    _compare_on_monomials(report, XD @ Xk, X @ (D @ Xk), N, form="XD X^k = X D X^k", **ctx)
    _compare_on_monomials(report, XD @ Xk, Xk @ (XD + k), N, form="XD X^k = X^k (XD+k)", **ctx)
    shifted = xd_falling_composed(n, lam, r - m * lam) @ Xk
    moved = Xk @ xd_falling_composed(n, lam, r + k - m * lam)
    _compare_on_monomials(report, shifted, moved, N, form="push falling through X^k", **ctx)
    expanded = Xk @ LinearCombination(
        [(binomial(n, l) * deg_falling(k - m * lam, n - l, lam), xd_falling_composed(l, lam, r)) for l in range(n + 1)]
    )
    _compare_on_monomials(report, moved, expanded, N, form="binomial re-expansion", **ctx)
    if k >= 1:
        report.merge(check_op_commutator_power(k, N))
    return report


def check_op_full_expansion(n: int, m: int, lam: Scalar, r: int = 0, N: int = DEFAULT_ORDER) -> IdentityReport:
    """(XD + r)_{n+m,lam} against its expansion through X^k (XD + r)_{l,lam} D^k."""
    lam = Fraction(lam)
    report = IdentityReport("operator.full-expansion")
    tri = triangle(lam, r)
    ctx = dict(n=n, m=m, r=r, lam=lam)
    lhs = xd_falling_composed(n + m, lam, r)
    stirling_form = xd_falling_composed(n, lam, r - m * lam) @ LinearCombination(
        [(tri(m, k), xk_dk(k)) for k in range(m + 1)]
    )
    _compare_on_monomials(report, lhs, stirling_form, N, form="stirling expansion of (XD+r)_m", **ctx)
    double_sum = LinearCombination(
        [
            (
                tri(m, k) * binomial(n, l) * deg_falling(k - m * lam, n - l, lam),
                Composition([X**k, xd_falling_composed(l, lam, r), D**k]),
            )
            for k in range(m + 1)
            for l in range(n + 1)
        ]
    )
    _compare_on_monomials(report, lhs, double_sum, N, form="double sum", **ctx)
    return report


def operator_bell(n: int, lam: Scalar, y: Scalar, r: int = 0, N: int = DEFAULT_ORDER) -> TruncSeries:
    """(XD + r)_{n,lam} applied to the series of e_lam^y(x)."""
    return xd_falling(n, lam, r)(deg_exp_series(y, lam, N, var="x"))


def beta_series(n: int, lam: Scalar, y: Scalar, r: int = 0, N: int = DEFAULT_ORDER) -> TruncSeries:
    """Power series in x of sum_k {n+r,k+r}_{r,lam} (y)_{k,lam} (x/(1+lam x))^k.

    Uses [x^j] (x/(1+lam x))^k = C(j-1, j-k) (-lam)^(j-k) for 1 <= k <= j.
    """
    lam = Fraction(lam)
    tri = triangle(lam, r)
    weights = [tri(n, k) * deg_falling(y, k, lam) for k in range(n + 1)]
    coeffs = [weights[0]]
    for j in range(1, N + 1):
        total = Fraction(0)
        for k in range(1, min(n, j) + 1):
            if weights[k]:
                total += weights[k] * math.comb(j - 1, j - k) * (-lam) ** (j - k)
        coeffs.append(total)
    return TruncSeries(coeffs, order=N, var="x")
