import json
from fractions import Fraction

import pytest

from degbell.exact import binomial, deg_falling
from degbell.families import fully_deg_bel, two_var_deg_fubini
from degbell.report import IdentityReport
from degbell.stirling import deg_stirling2
from degbell.verify import (
    ConfigError,
    ParamSample,
    SuiteConfig,
    _spivey_beta_rhs,
    _spivey_classical_two_var,
    draw_samples,
    run_suite,
    suite_json,
    verify_classical_regression,
    verify_dobinski,
    verify_egf_bell,
    verify_operator_theorems,
    verify_spivey_bel_fubini,
    verify_spivey_B,
    verify_spivey_B_r,
    verify_spivey_classical,
    verify_spivey_deg_phi,
)
from degbell.families import r_B_norm, classical_bell

SMALL = SuiteConfig(samples=3, egf_samples=3, op_samples=2, n_max=3, m_max=3, classical_max=5,
                    egf_n_max=6, stirling_n_max=6, r_stirling_n_max=5, dobinski_n_max=4, order=10)


def sample(lam, x, y=1, n=2, m=2, r=0):
    return ParamSample(Fraction(lam), Fraction(x), Fraction(y), n, m, r, seed=0)


def test_draw_samples_is_deterministic_and_pole_free():
    a, b = draw_samples(7, 40), draw_samples(7, 40)
    assert a == b
    assert all(1 + s.lam * s.x != 0 and s.lam != 0 for s in a)
    assert draw_samples(8, 40) != a


def test_spivey_examples():
    assert verify_spivey_classical(8, 8).passed
    assert verify_spivey_deg_phi([sample(Fraction(1, 2), Fraction(2, 3))], 2, 2).passed
    assert verify_spivey_bel_fubini([sample(Fraction(1, 3), 1)], 2, 2).passed
    assert verify_spivey_B([sample(Fraction(1, 2), Fraction(1, 3), 2)], 2, 2).passed
    assert verify_spivey_B_r([sample(Fraction(1, 3), Fraction(1, 2), Fraction(3, 2), r=1)], 2, 2, 1).passed
    lhs, rhs = _spivey_classical_two_var(2, 2, 1, 1, 2)
    assert lhs == rhs


def test_spivey_phi_two_plus_two():
    bell = [classical_bell(n, 1) for n in range(3)]
    assert bell[2] == 2


def test_r_zero_spivey_is_the_plain_recurrence():
    lam, x, y = Fraction(2, 3), Fraction(-1, 4), Fraction(5)
    for n in range(4):
        for m in range(4):
            assert _spivey_beta_rhs(n, m, lam, x, y, 0) == r_B_norm(n + m, lam, x, y, 0)


def test_spivey_pole_samples_are_skipped():
    rep = verify_spivey_B([sample(1, -1)], 2, 2)
    assert rep.skipped == 1 and rep.passed


def _bel_rhs(n, m, lam, x, fubini_x):
    total = Fraction(0)
    for k in range(m + 1):
        for l in range(n + 1):
            total += (
                deg_falling(1, k, lam)
                * deg_stirling2(m, k, lam)
                * binomial(n, l)
                * x**k
                * two_var_deg_fubini(n - l, k, lam, fubini_x(l), k - m * lam)
                * fully_deg_bel(l, lam, x)
            )
    return total


def test_bel_recurrence_needs_fubini_argument_minus_lambda_x():
    lam, x = Fraction(1, 3), Fraction(2, 5)
    for n in range(4):
        for m in range(4):
            assert _bel_rhs(n, m, lam, x, lambda l: -lam * x) == fully_deg_bel(n + m, lam, x)
    # the variant with -lam*l in place of -lam*x disagrees once n, m >= 1
    assert _bel_rhs(2, 2, lam, x, lambda l: -lam * l) != fully_deg_bel(4, lam, x)


def test_other_verifiers_pass_on_small_inputs():
    s = [sample(Fraction(1, 2), Fraction(1, 3), Fraction(2), r=2), sample(Fraction(-1, 3), 2, Fraction(-3, 2), r=1)]
    assert verify_classical_regression().passed
    assert verify_egf_bell(s, 6, 2).passed
    assert verify_dobinski(s, 12, 4, 2).passed
    assert verify_operator_theorems(s, 12, 4, 2).passed


def test_report_keeps_first_failure():
    rep = IdentityReport("x")
    assert rep.record(1, 1)
    assert not rep.record(1, 2, n=3)
    rep.record(5, 6, n=4)
    assert rep.counterexample == {"lhs": 1, "rhs": 2, "n": 3}
    assert rep.checks == 3
    assert rep.to_json()["counterexample"]["rhs"] == "2"
    assert "elapsed" not in rep.to_json()


def test_config_validation():
    with pytest.raises(ConfigError):
        SuiteConfig(samples=0).validate()
    with pytest.raises(ConfigError):
        SuiteConfig(mutation="nope").validate()
    with pytest.raises(ConfigError):
        SuiteConfig(order=2, dobinski_n_max=8).validate()


def test_small_suite_passes_and_is_deterministic():
    a = suite_json(run_suite(SMALL), SMALL)
    b = suite_json(run_suite(SMALL), SMALL)
    assert a == b
    doc = json.loads(a)
    assert doc["status"] == "pass"
    assert len(doc["reports"]) >= 9


def test_small_suite_detects_mutation():
    cfg = SuiteConfig(**{**SMALL.__dict__, "mutation": "stirling-sign"})
    reports = {r.identity_id: r for r in run_suite(cfg)}
    assert not reports["stirling.recurrence-vs-oracle"].passed
    assert reports["stirling.recurrence-vs-oracle"].counterexample is not None
    assert reports["classical.enumeration"].passed
    # the unmutated suite is unaffected afterwards
    assert all(r.passed for r in run_suite(SMALL))
