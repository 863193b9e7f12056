"""Exact checks of the lambda-recurrences and convolution identities.

Every ``check_*`` function evaluates LHS - RHS exactly and returns an
:class:`IdentityReport`.  Recurrences for lambda(2m) are reduced to a single
:class:`PiPower`; before anything is subtracted each term is required to carry
the same power of pi, so a wrong exponent shows up as
:class:`MixedExponentError` rather than as a silently nonzero residual.
Polynomial identities in Euler/Bernoulli numbers have plain rational residuals.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Iterator, Optional, Union

from .closed_forms import (
    MixedExponentError,
    PiPower,
    beta_odd,
    lambda_even,
    zeta_even,
)
from .exact import (
    bernoulli_number,
    bernoulli_polynomial,
    euler_poly_at,
    euler_zero,
)

__all__ = [
    "IdentityReport",
    "ExcludedParameter",
    "SuiteConfig",
    "SuiteResult",
    "IDENTITIES",
    "DEFAULT_ALPHAS",
    "run_suite",
    "report_to_record",
    "record_to_report",
    "dumps_records",
    "loads_records",
]

Residual = Union[PiPower, Fraction]
Rational = Union[int, Fraction]


class ExcludedParameter(ValueError):
    """The parameter lies outside an identity's hypotheses."""


@dataclass
class IdentityReport:
    identity_id: str
    params: dict
    residual: Optional[Residual]
    passed: bool
    elapsed: float = 0.0
    error: str = ""

    def residual_str(self) -> str:
        if self.residual is None:
            return ""
        if isinstance(self.residual, PiPower):
            return f"{self.residual.coefficient}*pi^{self.residual.exponent}"
        return str(self.residual)


def _pi(exponent: int, coefficient: Rational = 1) -> PiPower:
    return PiPower(Fraction(coefficient), exponent)


def _L(k: int) -> PiPower:
    """lambda(2k)."""
    return lambda_even(k)


def _collect(terms: Iterable[PiPower], exponent: int) -> PiPower:
    total = PiPower.zero()
    for term in terms:
        if not term.is_zero() and term.exponent != exponent:
            raise MixedExponentError(
                f"term has pi^{term.exponent}, expected pi^{exponent}"
            )
        total = total + term
    return total


def _delta(k: int) -> int:
    return 1 if k == 0 else 0


# --- lambda(2m) recurrences ------------------------------------------------


def _lettington(m: int) -> PiPower:
    bracket = [_pi(2 * m, Fraction(1, 4 * factorial(2 * m)))]
    bracket += [
        _pi(2 * k, Fraction((-1) ** (m - k), factorial(2 * k + 1))) * _L(m - k)
        for k in range(1, m)
    ]
    rhs = _collect(bracket, 2 * m) * (-1) ** (m - 1)
    return _collect([_L(m), -rhs], 2 * m)


def _thm1(m: int, alpha: Fraction) -> PiPower:
    if alpha == Fraction(1, 2):
        raise ExcludedParameter("alpha = 1/2 is excluded")
    terms = [
        _pi(2 * m + 2, Fraction((-1) ** (m + 1) * (alpha ** (2 * m) - (alpha - 1) ** (2 * m)),
                                4 * factorial(2 * m)))
    ]
    for k in range(1, m + 1):
        c = (-1) ** k * (alpha ** (2 * k - 1) + (alpha - 1) ** (2 * k - 1)) / factorial(2 * k - 1)
        terms.append(_pi(2 * k, c) * _L(m - k + 1))
    return _collect(terms, 2 * m + 2)


def _thm2(m: int, alpha: Fraction) -> PiPower:
    # Fraction(0) ** 0 == 1, which is the 0^0 = 1 convention
    terms = [
        _pi(2 * m + 2, Fraction((-1) ** (m + 1) * (alpha ** (2 * m + 1) - (alpha - 1) ** (2 * m + 1)),
                                4 * factorial(2 * m + 1)))
    ]
    for k in range(m + 1):
        c = (-1) ** k * (alpha ** (2 * k) + (alpha - 1) ** (2 * k)) / factorial(2 * k)
        terms.append(_pi(2 * k, c) * _L(m - k + 1))
    return _collect(terms, 2 * m + 2)


def _coro1(m: int) -> PiPower:
    terms = [_pi(2 * m + 2, Fraction((-1) ** (m + 1), 4 * factorial(2 * m + 1)))]
    for k in range(m + 1):
        c = Fraction((-1) ** k * (1 + _delta(k)), factorial(2 * k))
        terms.append(_pi(2 * k, c) * _L(m - k + 1))
    return _collect(terms, 2 * m + 2)


def _coro2(m: int) -> PiPower:
    terms = [_pi(2 * m + 2, Fraction((-1) ** (m + 1), 4 * factorial(2 * m + 1)))]
    for k in range(m + 1):
        c = Fraction((-1) ** k * 2 ** (2 * m - 2 * k + 1), factorial(2 * k))
        terms.append(_pi(2 * k, c) * _L(m - k + 1))
    return _collect(terms, 2 * m + 2)


def lambda_by_remark(m: int) -> list[PiPower]:
    """lambda(2), ..., lambda(2m) from the Euler-number-free recurrence."""
    values: list[PiPower] = []
    for j in range(1, m + 1):
        bracket = [_pi(2 * j, Fraction(1, 2 ** (2 * j + 1) * factorial(2 * j - 1)))]
        for k in range(1, j):
            c = Fraction((-1) ** (j - k), 2 ** (2 * k) * factorial(2 * k))
            bracket.append(_pi(2 * k, c) * values[j - k - 1])
        values.append(_collect(bracket, 2 * j) * (-1) ** (j - 1))
    return values


def _coro2_remark(m: int) -> PiPower:
    return _collect([lambda_by_remark(m)[-1], -_L(m)], 2 * m)


def _alt_power_sum(n: int, p: int) -> int:
    return 2 * sum((-1) ** j * j**p for j in range(1, n)) + (-1) ** n * n**p


def _cor3_part1(m: int, n: int) -> PiPower:
    if m < 1 or n < 1:
        raise ExcludedParameter("part 1 needs m > 0 and n > 0")
    terms = [
        _pi(2 * m + 2, Fraction((-1) ** (m + 1) * _alt_power_sum(n, 2 * m), 4 * factorial(2 * m)))
    ]
    for k in range(1, m + 1):
        c = Fraction((-1) ** n * (-1) ** k * n ** (2 * k - 1), factorial(2 * k - 1))
        terms.append(_pi(2 * k, c) * _L(m - k + 1))
    return _collect(terms, 2 * m + 2)


def _cor3_part2(m: int, n: int) -> PiPower:
    if m < 0 or n < 1:
        raise ExcludedParameter("part 2 needs m >= 0 and n > 0")
    terms = [
        _pi(2 * m + 2, Fraction((-1) ** (m + 1) * _alt_power_sum(n, 2 * m + 1),
                                4 * factorial(2 * m + 1)))
    ]
    for k in range(m + 1):
        c = Fraction((-1) ** k * ((-1) ** n * n ** (2 * k) - _delta(k)), factorial(2 * k))
        terms.append(_pi(2 * k, c) * _L(m - k + 1))
    return _collect(terms, 2 * m + 2)


def _thm4(m: int, alpha: Fraction) -> PiPower:
    lead = (alpha - 1) ** (2 * m) + (alpha + 1) ** (2 * m) - 2 * alpha ** (2 * m)
    terms = [_pi(2 * m + 2, (-1) ** m * lead / (4 * factorial(2 * m)))]
    for k in range(1, m + 1):
        c = (-1) ** k * ((alpha - 1) ** (2 * k - 1) - (alpha + 1) ** (2 * k - 1)) / factorial(2 * k - 1)
        terms.append(_pi(2 * k, c) * _L(m - k + 1))
    return _collect(terms, 2 * m + 2)


def _thm5(m: int, alpha: Fraction) -> PiPower:
    lead = (alpha - 1) ** (2 * m + 1) - (alpha + 1) ** (2 * m + 1)
    terms = [_pi(2 * m + 2, (-1) ** m * lead / (4 * factorial(2 * m + 1)))]
    for k in range(m + 1):
        w = (alpha - 1) ** (2 * k) + (alpha + 1) ** (2 * k) + 2 * alpha ** (2 * k)
        terms.append(_pi(2 * k, (-1) ** k * w / factorial(2 * k)) * _L(m - k + 1))
    return _collect(terms, 2 * m + 2)


def _thm6(m: int) -> PiPower:
    lhs = _L(m + 1) * ((-1) ** (m + 1) * 2 * (1 - Fraction(1, 3 ** (2 * m + 1))))
    rhs = [_pi(2 * m + 2, Fraction(1, 3 ** (2 * m + 1) * factorial(2 * m + 1)))]
    for k in range(m + 1):
        c = Fraction(4 * (-1) ** (k + 1), 3 ** (2 * m - 2 * k) * factorial(2 * m - 2 * k))
        rhs.append(_pi(2 * m - 2 * k, c) * _L(k + 1))
    return _collect([lhs, -_collect(rhs, 2 * m + 2)], 2 * m + 2)


def _lemma31_remark(m: int) -> PiPower:
    # lambda(2m+2) + (-1)^(m+1) pi^(2m+2) (1/(4(2m+1)!) + sum (-1)^(k+1) lambda(2k+2)/(pi^(2k+2)(2m-2k)!))
    inner = [_pi(2 * m + 2, Fraction((-1) ** (m + 1), 4 * factorial(2 * m + 1)))]
    for k in range(m + 1):
        c = Fraction((-1) ** (m + 1) * (-1) ** (k + 1), factorial(2 * m - 2 * k))
        inner.append(_pi(2 * m - 2 * k, c) * _L(k + 1))
    return _collect([_L(m + 1)] + inner, 2 * m + 2)


# --- Euler polynomial lemmas -----------------------------------------------


def _lemma31(n: int, x: Fraction, alpha: Fraction) -> Fraction:
    total = Fraction(0)
    for k in range(n + 1):
        w = alpha ** (n - k) - (-1) ** k * (2 * x - 1 + alpha) ** (n - k)
        total += w * comb(n, k) * euler_poly_at(k, x)
    return total


def _lemma41(n: int, x: Fraction, alpha: Fraction) -> Fraction:
    lhs = Fraction(0)
    for k in range(n + 1):
        w = ((2 * x + alpha - 1) ** k + (2 * x - alpha - 1) ** k) / 2
        lhs += (-1) ** (n - k) * comb(n, k) * w * euler_poly_at(n - k, x)
    rhs = sum(
        (comb(n, 2 * k) * euler_poly_at(n - 2 * k, x) * alpha ** (2 * k) for k in range(n // 2 + 1)),
        Fraction(0),
    )
    return lhs - rhs


@dataclass(frozen=True)
class _Gauss:
    """Gaussian rational re + i*im."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __add__(self, o: _Gauss) -> _Gauss:
        return _Gauss(self.re + o.re, self.im + o.im)

    def __sub__(self, o: _Gauss) -> _Gauss:
        return _Gauss(self.re - o.re, self.im - o.im)

    def __mul__(self, o: _Gauss) -> _Gauss:
        return _Gauss(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)


def _gauss_poly_mul(p: list[_Gauss], q: list[_Gauss]) -> list[_Gauss]:
    zero = _Gauss(Fraction(0))
    out = [zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def _gauss_poly_pow(p: list[_Gauss], e: int) -> list[_Gauss]:
    out = [_Gauss(Fraction(1))]
    for _ in range(e):
        out = _gauss_poly_mul(out, p)
    return out


def _lemma22(m: int) -> Fraction:
    # (i/2)[(1 + iu)^2m - (1 - iu)^2m] vs sum_k (-1)^k C(2m, 2k-1) u^(2k-1), u = t/pi
    one = _Gauss(Fraction(1))
    iu = _Gauss(Fraction(0), Fraction(1))
    plus = _gauss_poly_pow([one, iu], 2 * m)
    minus = _gauss_poly_pow([one, _Gauss(Fraction(0), Fraction(-1))], 2 * m)
    half_i = _Gauss(Fraction(0), Fraction(1, 2))
    lhs = [half_i * (a - b) for a, b in zip(plus, minus)]
    rhs = [_Gauss(Fraction(0))] * (2 * m + 1)
    for k in range(1, m + 1):
        rhs[2 * k - 1] = _Gauss(Fraction((-1) ** k * comb(2 * m, 2 * k - 1)))
    return max(max(abs(a.re - b.re), abs(a.im - b.im)) for a, b in zip(lhs, rhs))


def _lemma23(m: int) -> Fraction:
    # both sides as polynomials in (t, pi); LHS monomial t^(2k-1) pi^(2m-2k).
    # RHS = i/(2 pi (2m)!) [(pi + it)^2m - (pi - it)^2m]
    #     = i/(2 (2m)!) sum_j C(2m, j) (i^j - (-i)^j) t^j pi^(2m-1-j)
    worst = Fraction(0)
    ipow = [_Gauss(Fraction(1)), _Gauss(Fraction(0), Fraction(1)),
            _Gauss(Fraction(-1)), _Gauss(Fraction(0), Fraction(-1))]
    half_i = _Gauss(Fraction(0), Fraction(1, 2 * factorial(2 * m)))
    for j in range(2 * m + 1):
        diff = ipow[j % 4] - _Gauss(Fraction((-1) ** j)) * ipow[j % 4]
        rhs = half_i * diff * _Gauss(Fraction(comb(2 * m, j)))
        if j % 2 == 1:
            k = (j + 1) // 2
            lhs = _Gauss(Fraction((-1) ** k, factorial(2 * m - 2 * k + 1) * factorial(2 * k - 1)))
        else:
            lhs = _Gauss(Fraction(0))
        worst = max(worst, abs(lhs.re - rhs.re), abs(lhs.im - rhs.im))
    return worst


# --- convolutions ----------------------------------------------------------


def _conv_zeta(m: int) -> PiPower:
    if m < 2:
        raise ExcludedParameter("needs m >= 2")
    terms = [zeta_even(k) * zeta_even(m - k) for k in range(1, m)]
    terms.append(-(zeta_even(m) * (m + Fraction(1, 2))))
    return _collect(terms, 2 * m)


def _bernoulli_conv(m: int) -> Fraction:
    if m < 2:
        raise ExcludedParameter("needs m >= 2")
    lhs = sum(
        (comb(2 * m, 2 * k) * bernoulli_number(2 * k) * bernoulli_number(2 * m - 2 * k)
         for k in range(1, m)),
        Fraction(0),
    )
    return lhs + (2 * m + 1) * bernoulli_number(2 * m)


def _conv_lambda(m: int) -> PiPower:
    terms = [_L(k) * _L(m - k + 1) for k in range(1, m + 1)]
    terms.append(-(_L(m + 1) * (m + Fraction(1, 2))))
    return _collect(terms, 2 * m + 2)


def _conv_beta(m: int) -> PiPower:
    terms = [beta_odd(k) * beta_odd(m - k) for k in range(m + 1)]
    terms.append(-(_L(m + 1) * (m + Fraction(1, 2))))
    return _collect(terms, 2 * m + 2)


def _conv_zeta_lambda(m: int) -> PiPower:
    terms = [zeta_even(k) * _L(m - k + 1) * Fraction(1, 2 ** (2 * k)) for k in range(m + 1)]
    return _collect(terms, 2 * m + 2)


def _two_euler_conv(n: int) -> Fraction:
    half = Fraction(1, 2)
    lhs = sum(
        (euler_poly_at(k, half) * euler_poly_at(n - k, half) / (factorial(k) * factorial(n - k))
         for k in range(n + 1)),
        Fraction(0),
    )
    return lhs - 2 * euler_poly_at(n + 1, 1) / factorial(n)


def _euler_bernoulli_rel(n: int, x: Fraction) -> Fraction:
    lhs = 2**n * bernoulli_polynomial(n)(x / 2)
    rhs = sum(
        (comb(n, k) * bernoulli_number(k) * euler_poly_at(n - k, x) for k in range(n + 1)),
        Fraction(0),
    )
    return lhs - rhs


def _multiplication_thm(n: int, x: Fraction, m: int) -> Fraction:
    if m < 1 or m % 2 == 0:
        raise ExcludedParameter("m must be an odd positive integer")
    rhs = m**n * sum(
        ((-1) ** k * euler_poly_at(n, (x + k) / m) for k in range(m)), Fraction(0)
    )
    return euler_poly_at(n, x) - rhs


def _eq_one_third(m: int) -> Fraction:
    p = 2 * m + 1
    return euler_poly_at(p, Fraction(1, 3)) - (1 - Fraction(1, 3**p)) * euler_zero(p) / 2


def _con_eq(m: int) -> Fraction:
    p = 2 * m + 1
    third = Fraction(1, 3)
    rhs = third**p + sum(
        (comb(p, 2 * k + 1) * euler_zero(2 * k + 1) * third ** (2 * m - 2 * k) for k in range(m + 1)),
        Fraction(0),
    )
    return (1 - third**p) * euler_zero(p) / 2 - rhs


# --- public checks ---------------------------------------------------------


def _report(identity_id: str, params: dict, fn: Callable[[], Residual]) -> IdentityReport:
    start = time.perf_counter()
    residual = fn()
    elapsed = time.perf_counter() - start
    passed = (residual.is_zero() if isinstance(residual, PiPower) else residual == 0)
    return IdentityReport(identity_id, dict(params), residual, passed, elapsed)


def _frac(x: Rational) -> Fraction:
    return Fraction(x)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ExcludedParameter(msg)


def check_lettington(m: int) -> IdentityReport:
    _need(m >= 1, "m must be positive")
    return _report("lettington", {"m": m}, lambda: _lettington(m))


def check_thm1(m: int, alpha: Rational) -> IdentityReport:
    _need(m >= 1, "m must be positive")
    a = _frac(alpha)
    return _report("thm1", {"m": m, "alpha": a}, lambda: _thm1(m, a))


def check_thm2(m: int, alpha: Rational) -> IdentityReport:
    _need(m >= 0, "m must be nonnegative")
    a = _frac(alpha)
    return _report("thm2", {"m": m, "alpha": a}, lambda: _thm2(m, a))


def check_coro1(m: int) -> IdentityReport:
    _need(m >= 0, "m must be nonnegative")
    return _report("coro1", {"m": m}, lambda: _coro1(m))


def check_coro2(m: int) -> IdentityReport:
    _need(m >= 0, "m must be nonnegative")
    return _report("coro2", {"m": m}, lambda: _coro2(m))


def check_coro2_remark(m: int) -> IdentityReport:
    _need(m >= 1, "m must be positive")
    return _report("coro2_remark", {"m": m}, lambda: _coro2_remark(m))


def check_cor3_part1(m: int, n: int) -> IdentityReport:
    _need(m >= 1 and n >= 1, "part 1 needs m > 0 and n > 0")
    return _report("cor3_part1", {"m": m, "n": n}, lambda: _cor3_part1(m, n))


def check_cor3_part2(m: int, n: int) -> IdentityReport:
    _need(m >= 0 and n >= 1, "part 2 needs m >= 0 and n > 0")
    return _report("cor3_part2", {"m": m, "n": n}, lambda: _cor3_part2(m, n))


def check_thm4(m: int, alpha: Rational) -> IdentityReport:
    _need(m >= 1, "m must be positive")
    a = _frac(alpha)
    return _report("thm4", {"m": m, "alpha": a}, lambda: _thm4(m, a))


def check_thm5(m: int, alpha: Rational) -> IdentityReport:
    _need(m >= 0, "m must be nonnegative")
    a = _frac(alpha)
    return _report("thm5", {"m": m, "alpha": a}, lambda: _thm5(m, a))


def check_thm6(m: int) -> IdentityReport:
    _need(m >= 0, "m must be nonnegative")
    return _report("thm6", {"m": m}, lambda: _thm6(m))


def check_lemma31_remark(m: int) -> IdentityReport:
    _need(m >= 0, "m must be nonnegative")
    return _report("lemma31_remark", {"m": m}, lambda: _lemma31_remark(m))


def check_lemma31(n: int, x: Rational, alpha: Rational) -> IdentityReport:
    _need(n >= 0, "n must be nonnegative")
    x, a = _frac(x), _frac(alpha)
    return _report("lemma31", {"n": n, "x": x, "alpha": a}, lambda: _lemma31(n, x, a))


def check_lemma41(n: int, x: Rational, alpha: Rational) -> IdentityReport:
    _need(n >= 0, "n must be nonnegative")
    x, a = _frac(x), _frac(alpha)
    return _report("lemma41", {"n": n, "x": x, "alpha": a}, lambda: _lemma41(n, x, a))


def check_lemma22(m: int) -> IdentityReport:
    _need(m >= 1, "m must be positive")
    return _report("lemma22", {"m": m}, lambda: _lemma22(m))


def check_lemma23(m: int) -> IdentityReport:
    _need(m >= 1, "m must be positive")
    return _report("lemma23", {"m": m}, lambda: _lemma23(m))


def check_conv_zeta(m: int) -> IdentityReport:
    _need(m >= 2, "needs m >= 2")
    return _report("conv_zeta", {"m": m}, lambda: _conv_zeta(m))


def check_bernoulli_conv(m: int) -> IdentityReport:
    _need(m >= 2, "needs m >= 2")
    return _report("bernoulli_conv", {"m": m}, lambda: _bernoulli_conv(m))


def check_conv_lambda(m: int) -> IdentityReport:
    _need(m >= 1, "m must be positive")
    return _report("conv_lambda", {"m": m}, lambda: _conv_lambda(m))


def check_conv_beta(m: int) -> IdentityReport:
    _need(m >= 0, "m must be nonnegative")
    return _report("conv_beta", {"m": m}, lambda: _conv_beta(m))


def check_conv_zeta_lambda(m: int) -> IdentityReport:
    _need(m >= 1, "m must be positive")
    return _report("conv_zeta_lambda", {"m": m}, lambda: _conv_zeta_lambda(m))


def check_two_euler_conv(n: int) -> IdentityReport:
    _need(n >= 0, "n must be nonnegative")
    return _report("two_euler_conv", {"n": n}, lambda: _two_euler_conv(n))


def check_euler_bernoulli_rel(n: int, x: Rational) -> IdentityReport:
    _need(n >= 0, "n must be nonnegative")
    x = _frac(x)
    return _report("euler_bernoulli_rel", {"n": n, "x": x}, lambda: _euler_bernoulli_rel(n, x))


def check_multiplication_thm(n: int, x: Rational, m: int) -> IdentityReport:
    _need(n >= 0, "n must be nonnegative")
    _need(m >= 1 and m % 2 == 1, "m must be an odd positive integer")
    x = _frac(x)
    return _report("multiplication_thm", {"n": n, "x": x, "m": m},
                   lambda: _multiplication_thm(n, x, m))


def check_eq_one_third(m: int) -> IdentityReport:
    _need(m >= 0, "m must be nonnegative")
    return _report("eq_one_third", {"m": m}, lambda: _eq_one_third(m))


def check_con_eq(m: int) -> IdentityReport:
    _need(m >= 0, "m must be nonnegative")
    return _report("con_eq", {"m": m}, lambda: _con_eq(m))


# --- sweeps ----------------------------------------------------------------

DEFAULT_ALPHAS: tuple[Fraction, ...] = tuple(
    Fraction(a) for a in ("0", "1", "-1", "2", "1/3", "-2/3", "5/2", "7")
)
DEFAULT_XS: tuple[Fraction, ...] = tuple(Fraction(x) for x in ("0", "1/2", "1", "-1", "2/3", "5/2"))
DEFAULT_ODD_MS: tuple[int, ...] = (1, 3, 5, 7)


@dataclass
class SuiteConfig:
    """Cartesian sweep definition for :func:`run_suite`.

    ``identities=None`` selects every registered identity; an empty tuple
    selects none.
    """

    m_max: int = 40
    n_max: int = 10
    alphas: tuple[Fraction, ...] = DEFAULT_ALPHAS
    xs: tuple[Fraction, ...] = DEFAULT_XS
    odd_ms: tuple[int, ...] = DEFAULT_ODD_MS
    identities: Optional[tuple[str, ...]] = None


class SuiteResult(list):
    """List of reports; ``excluded`` holds (identity_id, params, reason) for skipped cells."""

    def __init__(self, reports=(), excluded=()):
        super().__init__(reports)
        self.excluded: list[tuple[str, dict, str]] = list(excluded)

    @property
    def failures(self) -> list[IdentityReport]:
        return [r for r in self if not r.passed]


def _m_cells(lo: int) -> Callable[[SuiteConfig], Iterator[dict]]:
    return lambda c: ({"m": m} for m in range(lo, c.m_max + 1))


def _m_alpha_cells(lo: int) -> Callable[[SuiteConfig], Iterator[dict]]:
    return lambda c: ({"m": m, "alpha": a} for m in range(lo, c.m_max + 1) for a in c.alphas)


def _n_cells(c: SuiteConfig) -> Iterator[dict]:
    return ({"n": n} for n in range(c.n_max + 1))


def _n_x_alpha_cells(c: SuiteConfig) -> Iterator[dict]:
    return ({"n": n, "x": x, "alpha": a} for n in range(c.n_max + 1) for x in c.xs for a in c.alphas)


def _cor3_cells(lo: int) -> Callable[[SuiteConfig], Iterator[dict]]:
    return lambda c: ({"m": m, "n": n} for m in range(lo, c.m_max + 1) for n in range(1, c.n_max + 1))


# identity id -> (check function, parameter-cell generator)
IDENTITIES: dict[str, tuple[Callable[..., IdentityReport], Callable[[SuiteConfig], Iterator[dict]]]] = {
    "lettington": (check_lettington, _m_cells(1)),
    "thm1": (check_thm1, _m_alpha_cells(1)),
    "thm2": (check_thm2, _m_alpha_cells(0)),
    "coro1": (check_coro1, _m_cells(0)),
    "coro2": (check_coro2, _m_cells(0)),
    "coro2_remark": (check_coro2_remark, _m_cells(1)),
    "cor3_part1": (check_cor3_part1, _cor3_cells(1)),
    "cor3_part2": (check_cor3_part2, _cor3_cells(0)),
    "thm4": (check_thm4, _m_alpha_cells(1)),
    "thm5": (check_thm5, _m_alpha_cells(0)),
    "thm6": (check_thm6, _m_cells(0)),
    "lemma31_remark": (check_lemma31_remark, _m_cells(0)),
    "lemma31": (check_lemma31, _n_x_alpha_cells),
    "lemma41": (check_lemma41, _n_x_alpha_cells),
    "lemma22": (check_lemma22, _m_cells(1)),
    "lemma23": (check_lemma23, _m_cells(1)),
    "conv_zeta": (check_conv_zeta, _m_cells(2)),
    "bernoulli_conv": (check_bernoulli_conv, _m_cells(2)),
    "conv_lambda": (check_conv_lambda, _m_cells(1)),
    "conv_beta": (check_conv_beta, _m_cells(0)),
    "conv_zeta_lambda": (check_conv_zeta_lambda, _m_cells(1)),
    "two_euler_conv": (check_two_euler_conv, _n_cells),
    "euler_bernoulli_rel": (
        check_euler_bernoulli_rel,
        lambda c: ({"n": n, "x": x} for n in range(c.n_max + 1) for x in c.xs),
    ),
    "multiplication_thm": (
        check_multiplication_thm,
        lambda c: ({"n": n, "x": x, "m": m} for n in range(c.n_max + 1) for x in c.xs for m in c.odd_ms),
    ),
    "eq_one_third": (check_eq_one_third, _m_cells(0)),
    "con_eq": (check_con_eq, _m_cells(0)),
}


def _sort_key(report_or_params) -> tuple:
    params = report_or_params
    return tuple((k, params[k]) for k in sorted(params))


def run_suite(config: Optional[SuiteConfig] = None) -> SuiteResult:
    """Evaluate every selected (identity, parameters) cell.

    Reports come back sorted by identity id, then parameters.  A cell that
    raises is recorded as a failed report; excluded parameters are listed in
    ``result.excluded`` instead.
    """
    config = config or SuiteConfig()
    selected = sorted(IDENTITIES) if config.identities is None else sorted(config.identities)
    unknown = [s for s in selected if s not in IDENTITIES]
    if unknown:
        raise KeyError(f"unknown identities: {', '.join(unknown)}")
    result = SuiteResult()
    for identity_id in selected:
        check, cells = IDENTITIES[identity_id]
        for params in sorted(cells(config), key=_sort_key):
            try:
                result.append(check(**params))
            except ExcludedParameter as exc:
                result.excluded.append((identity_id, dict(params), str(exc)))
            except Exception as exc:  # keep sweeping; the failure is recorded
                result.append(IdentityReport(identity_id, dict(params), None, False, 0.0,
                                             f"{type(exc).__name__}: {exc}"))
    return result


# --- line-oriented serialization ------------------------------------------


def report_to_record(report: IdentityReport) -> dict:
    """Flat string-valued record; rationals are kept as exact "p/q" strings."""
    return {
        "identity_id": report.identity_id,
        "params": ";".join(f"{k}={v}" for k, v in report.params.items()),
        "residual": report.residual_str(),
        "pass": "true" if report.passed else "false",
        "elapsed": repr(float(report.elapsed)),
        "error": report.error,
    }


def _parse_param(value: str) -> Union[int, Fraction]:
    f = Fraction(value)
    return f.numerator if f.denominator == 1 and "/" not in value else f


def _parse_residual(text: str) -> Optional[Residual]:
    if not text:
        return None
    if "*pi^" in text:
        coeff, exp = text.split("*pi^")
        return PiPower(Fraction(coeff), int(exp))
    return Fraction(text)


def record_to_report(record: dict) -> IdentityReport:
    params = {}
    if record["params"]:
        for item in record["params"].split(";"):
            k, v = item.split("=", 1)
            params[k] = _parse_param(v)
    return IdentityReport(
        identity_id=record["identity_id"],
        params=params,
        residual=_parse_residual(record["residual"]),
        passed=record["pass"] == "true",
        elapsed=float(record.get("elapsed") or 0.0),
        error=record.get("error", ""),
    )


RECORD_FIELDS = ("identity_id", "params", "residual", "pass", "elapsed", "error")


def dumps_records(reports: Iterable[IdentityReport]) -> str:
    """One ``key=value`` tab-separated line per report."""
    lines = []
    for r in reports:
        rec = report_to_record(r)
        lines.append("\t".join(f"{k}={rec[k]}" for k in RECORD_FIELDS))
    return "\n".join(lines) + ("\n" if lines else "")


def loads_records(text: str) -> list[IdentityReport]:
    out = []
    for line in text.splitlines():
        if not line.strip():
            continue
        rec = dict(item.split("=", 1) for item in line.split("\t"))
        out.append(record_to_report(rec))
    return out
