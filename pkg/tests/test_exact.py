import threading
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from dirlambda import exact
from dirlambda.exact import (
    RationalPolynomial,
    as_fraction,
    bernoulli_number,
    bernoulli_polynomial,
    binomial,
    euler_number,
    euler_poly_at,
    euler_polynomial,
    euler_zero,
)

from conftest import small_rationals


# --- independent oracles ----------------------------------------------------------


def akiyama_tanigawa(n):
    """B_0..B_n with B_1 = +1/2, by the Akiyama-Tanigawa triangle."""
    out, row = [], []
    for m in range(n + 1):
        row.append(Fraction(1, m + 1))
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    return out


def sech_euler_numbers(n):
    # cosh(t) * sech(t) = 1  =>  sum_{k even} C(j, k) E_{j-k} = 0 for j >= 1
    E = [1]
    for j in range(1, n + 1):
        E.append(-sum(comb(j, k) * E[j - k] for k in range(2, j + 1, 2)))
    return E


def euler_poly_oracle(n):
    # E_n(x) = x^n - (1/2) sum_{k<n} C(n, k) E_k(x)
    polys = []
    for j in range(n + 1):
        p = RationalPolynomial([0] * j + [1])
        for k in range(j):
            p = p - polys[k] * Fraction(comb(j, k), 2)
        polys.append(p)
    return polys


# --- examples -------------------------------------------------------------------


@pytest.mark.parametrize("n, expected", [(0, 1), (1, Fraction(-1, 2)), (4, Fraction(-1, 30)), (3, 0)])
def test_bernoulli_examples(n, expected):
    assert bernoulli_number(n) == expected


def test_bernoulli_matches_akiyama_tanigawa():
    oracle = akiyama_tanigawa(80)
    oracle[1] = -oracle[1]
    assert [bernoulli_number(n) for n in range(81)] == oracle


def test_bernoulli_polynomial_examples():
    x = RationalPolynomial([0, 1])
    assert bernoulli_polynomial(0) == RationalPolynomial([1])
    assert bernoulli_polynomial(1) == x - RationalPolynomial([Fraction(1, 2)])
    assert bernoulli_polynomial(2) == x * x - x + RationalPolynomial([Fraction(1, 6)])


def test_euler_polynomial_examples():
    assert euler_polynomial(0) == RationalPolynomial([1])
    assert euler_polynomial(1) == RationalPolynomial([Fraction(-1, 2), 1])
    assert euler_polynomial(2) == RationalPolynomial([0, -1, 1])
    assert str(euler_polynomial(2)) == "x^2 - x"


def test_euler_polynomials_match_recurrence_oracle():
    oracle = euler_poly_oracle(40)
    for n, p in enumerate(oracle):
        assert euler_polynomial(n) == p


def test_euler_poly_at_examples():
    assert euler_poly_at(3, Fraction(1, 3)) == Fraction(1, 2) * (1 - Fraction(1, 27)) * euler_zero(3)
    # x^3 - 3x^2/2 + 1/4 at x = 1/3
    assert euler_poly_at(3, Fraction(1, 3)) == Fraction(13, 108)
    for m in range(1, 20):
        assert euler_poly_at(2 * m, 1) == 0
    assert euler_poly_at(0, Fraction(7, 3)) == 1


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 0), (2, -1), (4, 5), (6, -61), (8, 1385)])
def test_euler_number_examples(n, expected):
    assert euler_number(n) == expected


def test_euler_numbers_match_sech_oracle():
    assert [euler_number(n) for n in range(61)] == sech_euler_numbers(60)


@pytest.mark.parametrize("n, k, expected", [(5, 2, 10), (9, 0, 1), (4, 5, 0), (0, 0, 1)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        bernoulli_number(-1)
    with pytest.raises(ValueError):
        euler_polynomial(-2)


def test_as_fraction():
    assert as_fraction("-2/3") == Fraction(-2, 3)
    assert as_fraction("6/4") == Fraction(3, 2)
    with pytest.raises(ValueError):
        as_fraction("1/0")


# --- properties -------------------------------------------------------------------


@given(st.integers(0, 30), small_rationals)
def test_euler_shift_relation(n, x):
    assert euler_poly_at(n, x) + euler_poly_at(n, x + 1) == 2 * x**n


@given(st.integers(0, 30), small_rationals)
def test_euler_reflection(n, x):
    assert euler_poly_at(n, 1 - x) == (-1) ** n * euler_poly_at(n, x)


@given(st.integers(0, 30), small_rationals)
def test_polynomial_and_pointwise_evaluation_agree(n, x):
    assert euler_polynomial(n)(x) == euler_poly_at(n, x)


@given(st.integers(1, 60))
def test_vanishing_values(m):
    assert euler_zero(2 * m) == 0
    assert euler_number(2 * m + 1) == 0
    assert euler_poly_at(m, 1) == (-1) ** m * euler_zero(m)


@given(st.integers(1, 60))
def test_odd_bernoulli_vanish(m):
    assert bernoulli_number(2 * m + 1) == 0


@given(st.integers(0, 40))
def test_bernoulli_polynomial_constant_term(n):
    assert bernoulli_polynomial(n)(0) == bernoulli_number(n)


@given(st.integers(1, 25), small_rationals)
def test_bernoulli_difference(n, x):
    b = bernoulli_polynomial(n)
    assert b(x + 1) - b(x) == n * x ** (n - 1)


@given(st.lists(small_rationals, max_size=6), st.lists(small_rationals, max_size=6), small_rationals)
def test_polynomial_ring_homomorphism(p, q, x):
    P, Q = RationalPolynomial(p), RationalPolynomial(q)
    assert (P * Q)(x) == P(x) * Q(x)
    assert (P + Q)(x) == P(x) + Q(x)
    assert (P - P).degree == -1


def test_memoization_is_transparent():
    before = [euler_zero(n) for n in range(50)], [bernoulli_number(n) for n in range(50)]
    exact.clear_tables()
    after = [euler_zero(n) for n in range(50)], [bernoulli_number(n) for n in range(50)]
    assert before == after


def test_concurrent_first_use():
    exact.clear_tables()
    results = {}

    def work(i):
        results[i] = [euler_number(n) for n in range(0, 90, 2)]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    expected = sech_euler_numbers(88)[::2]
    assert all(r == expected for r in results.values())


def test_precompute_fills_tables():
    exact.precompute(60)
    assert len(exact._euler_zero) > 60 and len(exact._bernoulli) > 60
