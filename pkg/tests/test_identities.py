from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dirlambda import identities as I
from dirlambda.closed_forms import MixedExponentError, PiPower, lambda_even
from dirlambda.identities import (
    ExcludedParameter,
    SuiteConfig,
    dumps_records,
    loads_records,
    record_to_report,
    report_to_record,
    run_suite,
)

from conftest import small_rationals

F = Fraction

EXAMPLES = [
    (I.check_lettington, dict(m=1)),
    (I.check_lettington, dict(m=2)),
    (I.check_lettington, dict(m=40)),
    (I.check_thm1, dict(m=1, alpha=1)),
    (I.check_thm1, dict(m=3, alpha=F(-2, 3))),
    (I.check_thm2, dict(m=0, alpha=0)),
    (I.check_thm2, dict(m=2, alpha=7)),
    (I.check_thm2, dict(m=5, alpha=F(1, 3))),
    (I.check_coro1, dict(m=0)),
    (I.check_coro1, dict(m=25)),
    (I.check_coro2, dict(m=1)),
    (I.check_coro2, dict(m=25)),
    (I.check_cor3_part1, dict(m=1, n=1)),
    (I.check_cor3_part1, dict(m=2, n=3)),
    (I.check_cor3_part2, dict(m=0, n=2)),
    (I.check_thm4, dict(m=1, alpha=0)),
    (I.check_thm4, dict(m=2, alpha=F(3, 2))),
    (I.check_thm4, dict(m=6, alpha=-5)),
    (I.check_thm5, dict(m=0, alpha=0)),
    (I.check_thm5, dict(m=3, alpha=2)),
    (I.check_thm5, dict(m=10, alpha=F(-1, 4))),
    (I.check_thm6, dict(m=0)),
    (I.check_thm6, dict(m=20)),
    (I.check_lemma31, dict(n=0, x=F(3, 7), alpha=2)),
    (I.check_lemma31, dict(n=4, x=F(1, 2), alpha=2)),
    (I.check_lemma31, dict(n=9, x=-1, alpha=F(1, 5))),
    (I.check_lemma41, dict(n=0, x=1, alpha=1)),
    (I.check_lemma41, dict(n=5, x=0, alpha=3)),
    (I.check_lemma41, dict(n=8, x=F(2, 3), alpha=F(-1, 2))),
    (I.check_lemma22, dict(m=1)),
    (I.check_lemma22, dict(m=10)),
    (I.check_conv_zeta, dict(m=2)),
    (I.check_conv_zeta, dict(m=30)),
    (I.check_bernoulli_conv, dict(m=3)),
    (I.check_conv_lambda, dict(m=1)),
    (I.check_conv_lambda, dict(m=25)),
    (I.check_conv_beta, dict(m=0)),
    (I.check_conv_beta, dict(m=15)),
    (I.check_conv_zeta_lambda, dict(m=1)),
    (I.check_conv_zeta_lambda, dict(m=20)),
    (I.check_two_euler_conv, dict(n=0)),
    (I.check_two_euler_conv, dict(n=11)),
    (I.check_euler_bernoulli_rel, dict(n=0, x=F(9, 4))),
    (I.check_euler_bernoulli_rel, dict(n=3, x=0)),
    (I.check_euler_bernoulli_rel, dict(n=7, x=F(5, 2))),
    (I.check_multiplication_thm, dict(n=5, x=F(1, 7), m=1)),
    (I.check_multiplication_thm, dict(n=4, x=F(1, 2), m=3)),
    (I.check_multiplication_thm, dict(n=6, x=0, m=5)),
    (I.check_eq_one_third, dict(m=0)),
    (I.check_eq_one_third, dict(m=12)),
]


@pytest.mark.parametrize("check, params", EXAMPLES, ids=lambda v: getattr(v, "__name__", str(v)))
def test_examples_have_zero_residual(check, params):
    report = check(**params)
    assert report.passed, report
    assert report.residual == 0 or report.residual == PiPower.zero()


def test_coro2_remark_reproduces_table():
    for m in range(1, 5):
        assert I.check_coro2_remark(m).passed
    assert I.lambda_by_remark(4)[-1] == lambda_even(4)


def test_thm1_excludes_one_half():
    with pytest.raises(ExcludedParameter):
        I.check_thm1(2, F(1, 2))
    result = run_suite(SuiteConfig(m_max=3, alphas=(F(1, 2), F(1)), identities=("thm1",)))
    assert [r.params["alpha"] for r in result] == [1, 1, 1]
    assert [(i, p["alpha"]) for i, p, _ in result.excluded] == [("thm1", F(1, 2))] * 3


@given(st.integers(1, 8), small_rationals.filter(lambda a: a != F(1, 2)))
def test_thm1_vanishes_for_any_alpha(m, alpha):
    assert I.check_thm1(m, alpha).passed


@given(st.integers(0, 8), small_rationals)
def test_thm2_thm5_vanish_for_any_alpha(m, alpha):
    assert I.check_thm2(m, alpha).passed
    assert I.check_thm5(m, alpha).passed


@given(st.integers(0, 12), small_rationals, small_rationals)
def test_lemmas_vanish_for_any_point(n, x, alpha):
    assert I.check_lemma31(n, x, alpha).passed
    assert I.check_lemma41(n, x, alpha).passed


def test_perturbed_lambda_is_detected(monkeypatch):
    true = I.lambda_even

    def perturbed(k):
        v = true(k)
        return v + PiPower(F(1, 10**9), v.exponent) if k == 3 else v

    monkeypatch.setattr(I, "lambda_even", perturbed)
    for check in (I.check_lettington, I.check_thm6, I.check_conv_lambda):
        assert not check(3).passed, check.__name__
    assert not I.check_thm1(3, F(2)).passed


def test_mismatched_pi_power_is_structural_error():
    with pytest.raises(MixedExponentError):
        I._collect([PiPower(F(1), 4), PiPower(F(1), 6)], 4)


def test_empty_and_unknown_selection():
    assert run_suite(SuiteConfig(identities=())) == []
    with pytest.raises(KeyError):
        run_suite(SuiteConfig(identities=("nope",)))


def test_suite_ordering_is_deterministic():
    cfg = SuiteConfig(m_max=4, n_max=2)
    a, b = run_suite(cfg), run_suite(cfg)
    key = [(r.identity_id, r.params) for r in a]
    assert key == [(r.identity_id, r.params) for r in b]
    assert [r.identity_id for r in a] == sorted(r.identity_id for r in a)


def test_failing_cell_is_recorded(monkeypatch):
    def boom(m):
        raise RuntimeError("broken")

    monkeypatch.setitem(I.IDENTITIES, "thm6", (boom, I.IDENTITIES["thm6"][1]))
    result = run_suite(SuiteConfig(m_max=1, identities=("thm6",)))
    assert len(result.failures) == 2
    assert "broken" in result.failures[0].error


def test_full_default_sweep_passes():
    result = run_suite()
    assert len(result) > 4000
    assert result.failures == []
    assert result.excluded == []


def test_record_round_trip():
    reports = run_suite(SuiteConfig(m_max=3, n_max=2))
    reports.append(I.IdentityReport("thm6", {"m": 2}, PiPower(F(-3, 7), 6), False, 0.125))
    for r in reports:
        assert record_to_report(report_to_record(r)) == r
    assert loads_records(dumps_records(reports)) == list(reports)
    assert report_to_record(reports[-1])["residual"] == "-3/7*pi^6"
