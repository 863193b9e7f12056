import itertools
from fractions import Fraction

import mpmath
import pytest

from dirlambda import closed_forms as cf
from dirlambda import numeric as nm
from dirlambda.exact import euler_poly_at
from dirlambda.numeric import DomainError, Precision

F = Fraction
QP = nm.QUAD_PRECISION
HP = Precision(target_tolerance=1e-25, working_digits=50)


def mp(q):
    return mpmath.mpf(q.numerator) / q.denominator if isinstance(q, Fraction) else mpmath.mpmathify(q)


@pytest.fixture(autouse=True)
def high_precision_comparisons():
    # comparisons of 1e-25 bounds need more than the default 15 digits
    with mpmath.workdps(60):
        yield


def J_oracle(s, a):
    # alternating Hurwitz zeta via two Hurwitz zetas; digamma limit at s = 1
    s, a = mpmath.mpmathify(s), mp(a)
    if s == 1:
        return (mpmath.digamma((a + 1) / 2) - mpmath.digamma(a / 2)) / 2
    return 2 ** (-s) * (mpmath.zeta(s, a / 2) - mpmath.zeta(s, (a + 1) / 2))


def agree(u, v):
    return abs(u.value - v.value) <= u.error_bound + v.error_bound


# --- configuration -------------------------------------------------------------------


def test_precision_validation():
    with pytest.raises(ValueError):
        Precision(target_tolerance=0)
    with pytest.raises(ValueError):
        Precision(target_tolerance=1e-40, working_digits=30)
    assert Precision().dps > Precision().working_digits


# --- Gamma and incomplete Gamma ----------------------------------------------------------


def test_gamma_function():
    with mpmath.workdps(60):
        assert nm.gamma_function(1).contains(1)
        assert nm.gamma_function(5).contains(24)
        # reflection: Gamma(1/2)^2 = pi / sin(pi/2)
        g = nm.gamma_function(F(1, 2))
        assert abs(g.value**2 - mpmath.pi) < 1e-45
    with pytest.raises(DomainError):
        nm.gamma_function(-3)


@pytest.mark.parametrize("x", [0.1, 1, 3.5, 20])
def test_incomplete_gamma_closed_forms(x):
    with mpmath.workdps(60):
        X = mpmath.mpf(x)
        assert nm.incomplete_gamma_upper(1, x).contains(mpmath.exp(-X), 1e-45)
        assert nm.incomplete_gamma_upper(2, x).contains((X + 1) * mpmath.exp(-X), 1e-45)


def test_incomplete_gamma_quadrature_oracle():
    with mpmath.workdps(40):
        # u = sqrt(t) turns int_1^oo t^(-1/2) e^-t dt into 2 int_1^oo e^(-u^2) du
        oracle = 2 * mpmath.quad(lambda u: mpmath.exp(-u * u), [1, mpmath.inf])
    assert abs(nm.incomplete_gamma_upper(F(1, 2), 1).value - oracle) < 1e-12


@pytest.mark.parametrize("s, x", [(-2.5, 0.3), (-2.5, 4), (0.5, 0.01), (3 + 2j, 2), (7.25, 30)])
def test_incomplete_gamma_against_mpmath(s, x):
    r = nm.incomplete_gamma_upper(s, x)
    with mpmath.workdps(60):
        assert abs(r.value - mpmath.gammainc(s, x)) <= r.error_bound + 1e-40


def test_incomplete_gamma_domain():
    with pytest.raises(DomainError):
        nm.incomplete_gamma_upper(1, 0)


# --- series --------------------------------------------------------------------------


def test_lambda_series_examples():
    with mpmath.workdps(60):
        assert nm.eval_lambda_series(2, QP).contains(mpmath.pi**2 / 8)
        assert nm.eval_lambda_series(4).contains(mpmath.pi**4 / 96)
    near = nm.eval_lambda_series(1.0001, QP)
    assert mpmath.isfinite(near.value) and near.value > 5000
    with pytest.raises(DomainError):
        nm.eval_lambda_series(1)


def test_exact_vs_numeric():
    with mpmath.workdps(70):
        for m in range(1, 7):
            assert nm.eval_lambda_series(2 * m, HP).contains(cf.lambda_even(m).to_mpf())
            assert nm.eval_zeta_via_lambda(2 * m, HP).contains(cf.zeta_even(m).to_mpf())
            assert nm.eval_eta_series(2 * m, HP).contains(cf.eta_even(m).to_mpf())
        for m in range(4):
            assert nm.eval_beta_series(2 * m + 1, HP).contains(cf.beta_odd(m).to_mpf())


def test_alternating_series_examples():
    with mpmath.workdps(60):
        assert nm.eval_eta_series(1).contains(mpmath.log(2))
        assert nm.eval_beta_series(3).contains(mpmath.pi**3 / 32)
        assert nm.eval_beta_series(2).contains(mpmath.catalan)
        assert nm.eval_J_direct(1, 1).contains(mpmath.log(2))
        assert nm.eval_J_direct(2, F(1, 2)).contains(4 * mpmath.catalan)
        assert nm.eval_zeta_via_lambda(6).contains(mpmath.pi**6 / 945)
    # slow convergence near s = 0 is handled by acceleration
    r = nm.eval_eta_series(0.05)
    with mpmath.workdps(60):
        assert r.contains(mpmath.altzeta(0.05))


@pytest.mark.parametrize("s", [0.3, 1.5, 2, 3])
def test_J_direct_matches_hurwitz_oracle(s):
    for a in (F(1, 4), F(1, 3), F(1)):
        assert nm.eval_J_direct(s, a).contains(J_oracle(s, a))


def test_domain_errors():
    with pytest.raises(DomainError):
        nm.eval_J_direct(2, 0)
    with pytest.raises(DomainError):
        nm.eval_J_direct(2, F(3, 2))
    with pytest.raises(DomainError):
        nm.eval_beta_series(-1)
    with pytest.raises(DomainError):
        nm.eval_J_promain(-2, 1, 1, QP)
    with pytest.raises(DomainError):
        nm.eval_J_promain(2, 1, 4, QP)
    with pytest.raises(DomainError):
        nm.eval_J_promain(2, 1, 0, QP)


# --- free-parameter expansion ----------------------------------------------------------


def test_promain_examples():
    with mpmath.workdps(40):
        assert nm.eval_J_promain(2, 1, 1, QP).contains(mpmath.pi**2 / 12)
        assert nm.eval_J_promain(3, F(1, 2), 1, QP).contains(mpmath.pi**3 / 4)
        assert nm.eval_eta_coffey(2, 1, QP).contains(mpmath.pi**2 / 12)
        assert nm.eval_beta_promain(1, 1, QP).contains(mpmath.pi / 4)
    assert agree(nm.eval_eta_coffey(0.5, 1, QP), nm.eval_eta_series(0.5, QP))


@pytest.mark.parametrize("s, a", [(2, F(1)), (0.5, F(1, 4)), (-1.5, F(1, 3)), (2 + 3j, F(1, 2))])
def test_free_parameter_invariance(s, a):
    runs = [nm.eval_J_promain(s, a, x, QP) for x in (0.5, 1.0, 2.0, 3.0)]
    for u, v in itertools.combinations(runs, 2):
        assert agree(u, v)
    assert all(abs(r.value - J_oracle(s, a)) <= r.error_bound for r in runs)


# --- integral representations --------------------------------------------------------------

GRID = [(s, a) for s in (0.5, 1, 2, 3.5) for a in (F(1, 4), F(1, 2), F(1))]


@pytest.mark.parametrize("s, a", GRID)
def test_cross_representation(s, a):
    runs = {
        "direct": nm.eval_J_direct(s, a, QP),
        "mellin": nm.eval_J_mellin(s, a, QP),
        "hermite": nm.eval_J_hermite(s, a, QP),
        "promain": nm.eval_J_promain(s, a, 1.0, QP),
    }
    for (n1, u), (n2, v) in itertools.combinations(runs.items(), 2):
        assert agree(u, v), (n1, n2)
    exact = J_oracle(s, a)
    for name, r in runs.items():
        assert abs(r.value - exact) <= r.error_bound, name


def test_mellin_examples():
    with mpmath.workdps(40):
        assert nm.eval_J_mellin(2, 1).contains(mpmath.pi**2 / 12)
        assert nm.eval_J_mellin(3, F(1, 2)).contains(mpmath.pi**3 / 4)
        assert nm.eval_J_mellin(1, 1).contains(mpmath.log(2))
        assert nm.eval_lambda_mellin(2).contains(mpmath.pi**2 / 8)
        assert nm.eval_lambda_mellin(4).contains(mpmath.pi**4 / 96)
        assert nm.eval_beta_sech(1).contains(mpmath.pi / 4)
        assert nm.eval_beta_sech(3).contains(mpmath.pi**3 / 32)
    assert agree(nm.eval_lambda_mellin(3), nm.eval_lambda_series(3, QP))
    assert agree(nm.eval_beta_sech(2), nm.eval_beta_series(2, QP))
    with pytest.raises(DomainError):
        nm.eval_lambda_mellin(1)


def test_hermite_continuation():
    for m in (1, 2, 3):
        assert abs(nm.eval_J_hermite(-2 * m, 1).value) <= 1e-10
    for a in (F(1, 3), F(1, 2), F(1)):
        for k in range(7):
            r = nm.eval_J_hermite(-k, a)
            assert r.contains(mp(euler_poly_at(k, a) / 2)), (k, a)
    with mpmath.workdps(40):
        assert nm.eval_J_hermite(2, 1).contains(mpmath.pi**2 / 12)


def test_hermite_complex_s():
    s = 0.5 + 14j
    r = nm.eval_J_hermite(s, 1)
    with mpmath.workdps(40):
        assert abs(r.value - mpmath.altzeta(s)) <= r.error_bound


@pytest.mark.parametrize("m", [1, 2, 3])
def test_quad_lemma24(m):
    r = nm.quad_lemma24(m)
    with mpmath.workdps(40):
        target = mpmath.pi ** (2 * m + 1) / 4
        assert abs(r.value - target) <= 1e-8 * target
        assert r.contains(target)


# --- functional relations and numeric identity checks -----------------------------------------------


@pytest.mark.parametrize("s", [2, 3, 4])
def test_functional_relations(s):
    eta = nm.eval_eta_series(s, HP)
    zeta = nm.eval_zeta_via_lambda(s, HP)
    factor = 1 - mpmath.mpf(2) ** (1 - s)
    assert abs(eta.value - factor * zeta.value) <= eta.error_bound + abs(factor) * zeta.error_bound
    J = nm.eval_J_direct(s, F(1, 2), HP)
    beta = nm.eval_beta_series(s, HP)
    assert abs(J.value - 2**s * beta.value) <= J.error_bound + 2**s * beta.error_bound


@pytest.mark.parametrize("s, a", [(2, F(1, 3)), (0.7, F(1, 2)), (3.5, F(1, 5))])
def test_shift_relation(s, a):
    # J(s, a+1) + J(s, a) = a^-s, with J(s, a+1) = a^-s - J(s, a) unfolded from the series
    lhs = nm.eval_J_direct(s, a, HP)
    with mpmath.workdps(60):
        shifted = mpmath.nsum(lambda n: (-1) ** n * (n + 1 + mp(a)) ** (-s), [0, mpmath.inf])
        assert abs(shifted + lhs.value - mp(a) ** (-s)) <= lhs.error_bound + 1e-25


def test_lemma21_numeric():
    assert nm.check_lemma21_numeric(2, 1).value <= 1e-12
    assert nm.check_lemma21_numeric(0, 3.7).value == 0
    assert nm.check_lemma21_numeric(2.7, 0.3).value <= 1e-30


def test_promain2_empty_sum():
    r = nm.check_promain2(4, 1, 0)
    with mpmath.workdps(60):
        g = mpmath.gamma(4)
        expected = abs(g * mpmath.altzeta(4) - g * (mpmath.mpf(2) ** -3 - 1) / 6)
    assert abs(r.value - expected) < 1e-25
    assert r.value > 1


def test_promain2_truncations_grow():
    # 2^n Gamma(s+n)/(n+1)! J(s+n, a) does not tend to zero, so deeper truncations move away
    residuals = [nm.check_promain2(3, 1, N, QP).value for N in (10, 20, 40)]
    assert residuals[0] < residuals[1] < residuals[2]
