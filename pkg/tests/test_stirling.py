import threading
from fractions import Fraction

import pytest

from degbell.combinat import count_partitions, stirling2_by_surjections
from degbell.exact import LambdaPoly, deg_falling, falling
from degbell.stirling import (
    SYMBOLIC,
    classical_stirling2,
    deg_r_stirling2,
    deg_r_stirling2_oracle,
    deg_stirling2,
    deg_stirling2_oracle,
    flipped_lambda_sign,
    triangle,
)

LAMS = [Fraction(0), Fraction(1), Fraction(-1, 2), Fraction(2, 3), Fraction(7)]


def test_symbolic_examples():
    assert deg_stirling2(2, 1, SYMBOLIC) == LambdaPoly([1, -1])
    assert deg_stirling2(3, 2, SYMBOLIC) == LambdaPoly([3, -3])
    assert deg_stirling2(5, 5, SYMBOLIC) == LambdaPoly([1])
    assert deg_stirling2(4, 2, 0) == 7
    assert triangle(SYMBOLIC).row(2) == [LambdaPoly(), LambdaPoly([1, -1]), LambdaPoly([1])]
    assert triangle(SYMBOLIC).row(0) == [LambdaPoly([1])]
    assert triangle(Fraction(1, 3)).row(1) == [0, 1]


def test_r_stirling_examples():
    assert deg_r_stirling2(1, 0, 2, SYMBOLIC) == LambdaPoly([2])
    for r in range(4):
        for lam in LAMS:
            assert deg_r_stirling2(1, 1, r, lam) == 1


def test_out_of_range_entries_are_zero():
    assert deg_stirling2(3, 5, Fraction(1, 2)) == 0
    assert deg_stirling2(3, -1, 1) == 0


def test_classical_against_enumeration():
    assert classical_stirling2(3, 2) == 3
    assert classical_stirling2(4, 2) == 7
    for n in range(8):
        assert [classical_stirling2(n, k) for k in range(n + 1)] == stirling2_by_surjections(n)
        for k in range(n + 1):
            assert classical_stirling2(n, k) == count_partitions(n, k)


def test_recurrence_matches_basis_oracle_symbolically():
    for n in range(13):
        assert triangle(SYMBOLIC).row(n) == deg_stirling2_oracle(n, SYMBOLIC)
    for r in range(1, 4):
        for n in range(11):
            assert triangle(SYMBOLIC, r).row(n) == deg_r_stirling2_oracle(n, r, SYMBOLIC)


@pytest.mark.parametrize("lam", LAMS)
def test_defining_expansion_at_integer_points(lam):
    # (x + r)_{n,lam} = sum_k S_r(n, k) (x)_k, checked at x = 0..n+2
    for r in range(4):
        for n in range(9):
            for x in range(n + 3):
                rhs = sum(deg_r_stirling2(n, k, r, lam) * falling(x, k) for k in range(n + 1))
                assert deg_falling(x + r, n, lam) == rhs


def test_lambda_zero_limit_and_symbolic_degree():
    for n in range(13):
        for k in range(n + 1):
            sym = deg_stirling2(n, k, SYMBOLIC)
            assert sym(0) == classical_stirling2(n, k)
            assert sym.degree <= n - k
            for lam in LAMS:
                assert sym(lam) == deg_stirling2(n, k, lam)


def test_concurrent_readers_see_the_same_rows():
    lam = Fraction(3, 11)
    results = []

    def work():
        results.append([list(triangle(lam, 2).row(n)) for n in range(30)])

    threads = [threading.Thread(target=work) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)
    assert results[0][29] == deg_r_stirling2_oracle(29, 2, lam)


def test_flipped_sign_breaks_oracle_and_restores():
    with flipped_lambda_sign():
        assert triangle(SYMBOLIC).row(2) != deg_stirling2_oracle(2, SYMBOLIC)
    assert triangle(SYMBOLIC).row(2) == deg_stirling2_oracle(2, SYMBOLIC)


def test_negative_r_rejected():
    with pytest.raises(ValueError):
        triangle(1, -1)
