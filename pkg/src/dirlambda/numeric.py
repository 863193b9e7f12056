"""High-precision evaluation of lambda, beta, eta, zeta and J(s, a).

Each evaluator returns a :class:`NumericValue` whose ``error_bound`` comes
from an explicit truncation estimate for the representation used:

* direct series: Euler-Maclaurin tail for the positive series, and the
  Cohen-Villegas-Zagier bound for accelerated alternating series;
* integral representations: an analytic tail bound past a cutoff ``T`` plus
  the tanh-sinh error estimate on ``[0, T]``;
* the free-parameter expansion: a geometric bound on the incomplete-gamma
  series and a Cauchy-estimate bound on the Euler-polynomial series.

Rounding is covered by running every evaluation with guard digits on top
of ``Precision.working_digits``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Union

import mpmath
import numpy as np

from .exact import bernoulli_number

__all__ = [
    "Precision",
    "NumericValue",
    "DomainError",
    "PrecisionError",
    "IterationLimitError",
    "gamma_function",
    "incomplete_gamma_upper",
    "eval_lambda_series",
    "eval_zeta_via_lambda",
    "eval_eta_series",
    "eval_beta_series",
    "eval_J_direct",
    "eval_J_promain",
    "eval_eta_coffey",
    "eval_beta_promain",
    "eval_J_hermite",
    "eval_J_mellin",
    "eval_lambda_mellin",
    "eval_beta_sech",
    "quad_lemma24",
    "check_lemma21_numeric",
    "check_promain2",
    "QUAD_PRECISION",
]

GUARD_DIGITS = 10

RealLike = Union[int, float, str, Fraction, mpmath.mpf]


class DomainError(ValueError):
    """Argument outside the domain of the chosen representation."""


class PrecisionError(RuntimeError):
    """A quadrature or series could not certify the requested tolerance."""


class IterationLimitError(PrecisionError):
    """An iterative scheme hit its iteration cap before converging."""


@dataclass(frozen=True)
class Precision:
    """Accuracy settings for one evaluation.

    ``quadrature_tail_cutoff`` of 0 lets each integral pick its own cutoff
    from its tail bound.
    """

    target_tolerance: float = 1e-30
    working_digits: int = 50
    max_terms: int = 2000
    quadrature_tail_cutoff: float = 0.0

    def __post_init__(self):
        if not self.target_tolerance > 0:
            raise ValueError("target_tolerance must be positive")
        if self.working_digits < 1 or self.max_terms < 1:
            raise ValueError("working_digits and max_terms must be positive")
        if 10.0 ** (-self.working_digits) > self.target_tolerance / 10:
            raise ValueError(
                f"{self.working_digits} digits cannot resolve tolerance {self.target_tolerance:g}"
            )

    @property
    def dps(self) -> int:
        return self.working_digits + GUARD_DIGITS

    def with_tolerance(self, tol) -> Precision:
        return replace(self, target_tolerance=float(tol))


DEFAULT_PRECISION = Precision()
QUAD_PRECISION = Precision(target_tolerance=1e-12, working_digits=30)


@dataclass
class NumericValue:
    value: Union[mpmath.mpf, mpmath.mpc]
    error_bound: mpmath.mpf
    working_precision: int
    method: str = ""
    terms: int = 0

    def contains(self, exact, slack=0) -> bool:
        """True if ``exact`` lies within ``error_bound`` (+ slack) of ``value``."""
        return abs(self.value - exact) <= self.error_bound + slack

    def __str__(self) -> str:
        digits = max(self.working_precision, 15)
        return f"{mpmath.nstr(self.value, digits)} +/- {mpmath.nstr(self.error_bound, 3)}"


def _mp(x: RealLike):
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    if isinstance(x, str) and "/" in x:
        return _mp(Fraction(x))
    if isinstance(x, (mpmath.mpf, mpmath.mpc, complex)):
        return mpmath.mpmathify(x)
    return mpmath.mpf(x)


def _is_nonpositive_integer(s) -> bool:
    s = mpmath.mpmathify(s)
    return mpmath.im(s) == 0 and mpmath.re(s) <= 0 and mpmath.re(s) == mpmath.floor(mpmath.re(s))


def _rounding(scale, n_ops: int = 1):
    # generous estimate of accumulated rounding at the current mp precision
    return abs(scale) * (n_ops + 1) * mpmath.mpf(10) ** (-(mpmath.mp.dps - 2))


def _check_a(a) -> None:
    if not 0 < a <= 1:
        raise DomainError(f"a must lie in (0, 1], got {a}")


# --- Gamma and incomplete Gamma ---------------------------------------------


def gamma_function(s, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    """Gamma(s) for real or complex s off the poles."""
    with mpmath.workdps(prec.dps):
        s = _mp(s)
        if _is_nonpositive_integer(s):
            raise DomainError(f"Gamma has a pole at s = {s}")
        g = mpmath.gamma(s)
        return NumericValue(+g, _rounding(g, 4), prec.working_digits, "mpmath.gamma", 1)


def _upper_gamma_cf(s, x, eps, max_iter):
    # modified Lentz on Legendre's continued fraction
    tiny = mpmath.mpf(10) ** (-(mpmath.mp.dps + 20))
    b = x + 1 - s
    c = 1 / tiny
    d = 1 / b
    h = d
    for i in range(1, max_iter + 1):
        an = -i * (i - s)
        b += 2
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1 / d
        delta = d * c
        h *= delta
        if abs(delta - 1) < eps:
            val = mpmath.exp(-x + s * mpmath.log(x)) * h
            # heuristic: the last correction plus a safety factor of 10
            return val, abs(val) * 10 * abs(delta - 1) + _rounding(val, i), i
    raise IterationLimitError(f"incomplete gamma continued fraction: no convergence in {max_iter}")


def _lower_gamma_series(s, x, eps, max_iter):
    # gamma(s, x) = x^s e^-x sum_k x^k / (s (s+1) ... (s+k))
    term = 1 / s
    total = term
    for k in range(1, max_iter + 1):
        term *= x / (s + k)
        total += term
        ratio = abs(x / (s + k + 1))
        if ratio < mpmath.mpf(1) / 2:
            tail = abs(term) * ratio / (1 - ratio)
            if tail <= eps * abs(total):
                pref = mpmath.exp(-x + s * mpmath.log(x))
                return pref * total, abs(pref) * (tail + _rounding(total, k)), k
    raise IterationLimitError(f"lower incomplete gamma series: no convergence in {max_iter}")


def _upper_gamma(s, x, eps, max_iter=100000):
    """(value, error, iterations) for Gamma(s, x) at the current precision."""
    sr = mpmath.re(s)
    if sr > 0 and x < sr + 1:
        low, err, it = _lower_gamma_series(s, x, eps, max_iter)
        g = mpmath.gamma(s)
        return g - low, err + _rounding(g, 2), it
    if sr <= 0 and x < 1 and not _is_nonpositive_integer(s):
        # Gamma(s, x) = (Gamma(s+1, x) - x^s e^-x) / s, recursing towards Re(s) > 0
        up, err, it = _upper_gamma(s + 1, x, eps, max_iter)
        pref = mpmath.exp(-x + s * mpmath.log(x))
        return (up - pref) / s, (err + _rounding(pref)) / abs(s), it + 1
    return _upper_gamma_cf(s, x, eps, max_iter)


def incomplete_gamma_upper(s, x, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    """Gamma(s, x) = int_x^oo t^(s-1) e^-t dt for x > 0.

    Uses the lower series when x < Re(s) + 1 and the continued fraction
    otherwise.  The continued-fraction error bound is heuristic (last
    correction times a safety factor).
    """
    with mpmath.workdps(prec.dps):
        s, x = _mp(s), _mp(x)
        if not x > 0:
            raise DomainError("incomplete_gamma_upper needs x > 0")
        eps = mpmath.mpf(10) ** (-(prec.working_digits + 2))
        val, err, it = _upper_gamma(s, x, eps, max_iter=max(prec.max_terms, 10000))
        return NumericValue(+val, err, prec.working_digits, "incomplete-gamma", it)


# --- direct series -----------------------------------------------------------


def eval_lambda_series(s: RealLike, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    """lambda(s) = sum_{n>=0} (2n+1)^-s for real s > 1.

    Partial sum of the first N terms plus an Euler-Maclaurin tail.  For
    f(u) = (2u+1)^-s all derivatives alternate in sign, so the remainder is
    bounded by the first omitted correction; the returned bound doubles it.
    """
    with mpmath.workdps(prec.dps):
        s = _mp(s)
        if not (mpmath.im(s) == 0 and s > 1):
            raise DomainError("lambda series needs real s > 1")
        tol = mpmath.mpf(prec.target_tolerance)
        N = max(16, prec.working_digits)
        while True:
            result = _lambda_em(s, N, tol)
            if result is not None:
                value, bound, p = result
                break
            N *= 2
            if N > prec.max_terms * 64:
                raise PrecisionError("Euler-Maclaurin tail did not reach tolerance")
        bound += _rounding(value, N + p)
        return NumericValue(value, bound, prec.working_digits, "series+euler-maclaurin", N + p)


def _lambda_em(s, N, tol):
    head = mpmath.fsum((2 * n + 1) ** (-s) for n in range(N))
    w = mpmath.mpf(2 * N + 1)
    tail = w ** (1 - s) / (2 * (s - 1)) + w ** (-s) / 2
    # f^(k)(N) = (-1)^k (s)_k 2^k w^(-s-k)
    rising = s  # (s)_{2j-1}
    last = None
    for j in range(1, 400):
        if j > 1:
            rising *= (s + 2 * j - 3) * (s + 2 * j - 2)
        deriv = -rising * mpmath.mpf(2) ** (2 * j - 1) * w ** (-s - 2 * j + 1)
        b = bernoulli_number(2 * j)
        term = mpmath.mpf(b.numerator) / b.denominator / mpmath.factorial(2 * j) * deriv
        if abs(term) <= tol / 4:
            return head + tail, 2 * abs(term), j
        if last is not None and abs(term) > abs(last):
            return None  # asymptotic series started to diverge; need a larger N
        tail -= term
        last = term
    return None


def eval_zeta_via_lambda(s: RealLike, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    """zeta(s) = lambda(s) / (1 - 2^-s)."""
    with mpmath.workdps(prec.dps):
        s = _mp(s)
        if not (mpmath.im(s) == 0 and s > 1):
            raise DomainError("zeta via lambda needs real s > 1")
        factor = 1 - mpmath.mpf(2) ** (-s)
        lam = eval_lambda_series(s, prec.with_tolerance(prec.target_tolerance * float(factor)))
        return NumericValue(lam.value / factor, lam.error_bound / factor + _rounding(lam.value / factor),
                            prec.working_digits, "lambda-series/(1-2^-s)", lam.terms)


def _cvz(terms: Callable[[int], mpmath.mpf], n: int):
    """Cohen-Villegas-Zagier weighted sum of sum_k (-1)^k terms(k)."""
    d = (3 + mpmath.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = mpmath.mpf(-1)
    c = -d
    acc = mpmath.mpf(0)
    for k in range(n):
        c = b - c
        acc += c * terms(k)
        b = (k + n) * (k - n) * b / ((k + mpmath.mpf(1) / 2) * (k + 1))
    return acc / d, d


def _alternating(terms: Callable[[int], mpmath.mpf], prec: Precision, label: str) -> NumericValue:
    """sum_{k>=0} (-1)^k terms(k) for a totally monotone sequence terms(k).

    terms(k) = (k + c)^-s is a moment sequence of a positive measure on
    [0, 1], which makes both the first-omitted-term bound of the plain sum
    and the |S - S_n| <= terms(0)/d_n bound of the CVZ scheme valid.
    """
    tol = mpmath.mpf(prec.target_tolerance)
    first = terms(0)
    if terms(prec.max_terms) <= tol / 2:
        # plain partial sum: find the first term below tol/2
        total = mpmath.mpf(0)
        for k in range(prec.max_terms + 1):
            t = terms(k)
            if t <= tol / 2:
                return NumericValue(total, t + _rounding(first, k), prec.working_digits,
                                    f"{label}:partial-sum", k)
            total += (-1) ** k * t
    rate = 3 + math.sqrt(8)
    n = max(1, math.ceil(float(mpmath.log(2 * first / tol) / mpmath.log(rate))))
    value, d = _cvz(terms, n)
    bound = first / d + _rounding(first, 4 * n)
    return NumericValue(value, bound, prec.working_digits, f"{label}:cvz-accelerated", n)


def _positive_real(s, name):
    if not (mpmath.im(s) == 0 and s > 0):
        raise DomainError(f"{name} series needs real s > 0")


def eval_eta_series(s: RealLike, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    """eta(s) = sum_{n>=1} (-1)^(n-1) n^-s, s > 0."""
    with mpmath.workdps(prec.dps):
        s = _mp(s)
        _positive_real(s, "eta")
        return _alternating(lambda k: mpmath.mpf(k + 1) ** (-s), prec, "eta")


def eval_beta_series(s: RealLike, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    """beta(s) = sum_{n>=0} (-1)^n (2n+1)^-s, s > 0."""
    with mpmath.workdps(prec.dps):
        s = _mp(s)
        _positive_real(s, "beta")
        return _alternating(lambda k: mpmath.mpf(2 * k + 1) ** (-s), prec, "beta")


def eval_J_direct(s: RealLike, a: RealLike, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    """J(s, a) = sum_{n>=0} (-1)^n (n+a)^-s, s > 0, 0 < a <= 1."""
    with mpmath.workdps(prec.dps):
        s, a = _mp(s), _mp(a)
        _positive_real(s, "J")
        _check_a(a)
        return _alternating(lambda k: (k + a) ** (-s), prec, "J")


# --- free-parameter expansion --------------------------------------------------


_euler_coeff_cache: dict[tuple, list] = {}


def _euler_taylor(z, n_terms: int) -> list:
    """c_n = E_n(z)/n! for n < n_terms, from c_n = z^n/n! - (1/2) sum_{k<n} c_k/(n-k)!."""
    key = (mpmath.nstr(z, mpmath.mp.dps), mpmath.mp.dps)
    coeffs = _euler_coeff_cache.setdefault(key, [])
    if len(coeffs) < n_terms:
        inv_fact = [1 / mpmath.factorial(j) for j in range(n_terms + 1)]
        zpow = z ** len(coeffs) if coeffs else mpmath.mpf(1)
        for n in range(len(coeffs), n_terms):
            acc = mpmath.fsum(coeffs[k] * inv_fact[n - k] for k in range(n))
            coeffs.append(zpow * inv_fact[n] - acc / 2)
            zpow *= z
    return coeffs[:n_terms]


def _euler_series_plan(z: float, x: float, sigma: float, tol: float):
    """Smallest N and its tail bound for sum_{n>=N} |E_n(z)|/n! x^(n+sigma)/(n+sigma).

    Cauchy: |E_n(z)/n!| <= M(r) / r^n on a circle |t| = r < pi, with
    M(r) <= 2 e^{|z| r} / min_{|t|=r} |e^t + 1|.  The minimum is sampled and
    reduced by the Lipschitz constant r e^r of e^t times the sample spacing.
    """
    best = None
    for delta in (0.5 * (math.pi - x), 0.3, 0.1, 0.03, 0.01, 0.003):
        r = math.pi - delta
        if r <= x:
            continue
        k = 200_000
        theta = np.linspace(0.0, 2 * math.pi, k, endpoint=False)
        t = r * np.exp(1j * theta)
        lo = np.min(np.abs(np.exp(t) + 1.0)) - r * math.exp(r) * (math.pi / k)
        if lo <= 0:
            continue
        M = 2 * math.exp(abs(z) * r) / (0.99 * lo)
        q = x / r
        n = max(8, math.ceil(-sigma) + 2)
        while True:
            bound = M * x**sigma * q**n / ((n + sigma) * (1 - q))
            if bound <= tol or n > 200_000:
                break
            n += max(1, n // 8)
        if bound <= tol and (best is None or n < best[0]):
            best = (n, bound)
    if best is None:
        raise PrecisionError(f"no Cauchy bound found for x_free = {x}")
    return best


def _promain_core(s, a, x, prec: Precision, label: str) -> NumericValue:
    """Gamma(s) J(s, a) split at x, divided by Gamma(s)."""
    if _is_nonpositive_integer(s):
        raise DomainError(
            f"s = {s} is a pole of Gamma; use the exact values in closed_forms (J_neg_int)"
        )
    if not 0 < x < mpmath.pi:
        raise DomainError("x_free must lie in (0, pi)")
    _check_a(a)
    sigma = mpmath.re(s)
    g = mpmath.gamma(s)
    tol_part = mpmath.mpf(prec.target_tolerance) * abs(g) / 4
    eps = mpmath.mpf(10) ** (-(prec.working_digits + 2))

    # sum_n (-1)^n Gamma(s, (n+a)x)/(n+a)^s; |term n| <= T_n(sigma), T_{n+1} <= e^-x T_n
    q = mpmath.exp(-x)
    head = mpmath.mpf(0)
    head_err = mpmath.mpf(0)
    n = 0
    while True:
        y = (n + a) * x
        val, err, _ = _upper_gamma(s, y, eps)
        scale = (n + a) ** (-s)
        head += (-1) ** n * val * scale
        head_err += err * abs(scale)
        if mpmath.im(s) == 0:
            mag = abs(val * scale)
        else:
            mag = abs(_upper_gamma(sigma, y, eps)[0]) * (n + a) ** (-sigma)
        n += 1
        tail_bound = mag * q / (1 - q)
        if tail_bound <= tol_part:
            break
        if n > prec.max_terms * 10:
            raise PrecisionError("incomplete-gamma series did not converge")
    head_terms = n

    # (1/2) sum_n E_n(1-a)/n! x^(n+s)/(n+s)
    n_euler, euler_tail = _euler_series_plan(float(1 - a), float(x), float(sigma), float(tol_part) * 2)
    coeffs = _euler_taylor(1 - a, n_euler)
    xs = x**s
    body = mpmath.fsum(c * x**k / (k + s) for k, c in enumerate(coeffs)) * xs / 2
    total = head + body
    value = total / g
    bound = (head_err + tail_bound + euler_tail / 2 + _rounding(total, head_terms + n_euler)) / abs(g)
    bound += _rounding(value, 4)
    return NumericValue(value, bound, prec.working_digits, label, head_terms + n_euler)


def eval_J_promain(s, a: RealLike, x_free: RealLike, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    """J(s, a) from the incomplete-gamma / Euler-polynomial split at ``x_free``.

    Valid for every s except the poles of Gamma (0, -1, -2, ...), for which
    the exact values :func:`dirlambda.closed_forms.J_neg_int` apply.
    """
    with mpmath.workdps(prec.dps):
        return _promain_core(_mp(s), _mp(a), _mp(x_free), prec, "free-parameter")


def eval_eta_coffey(s, x_free: RealLike, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    """eta(s): the a = 1 case (Euler coefficients E_n(0)/n!)."""
    with mpmath.workdps(prec.dps):
        return _promain_core(_mp(s), mpmath.mpf(1), _mp(x_free), prec, "coffey")


def eval_beta_promain(s, x_free: RealLike, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    """beta(s) = 2^-s J(s, 1/2): Euler coefficients E_n / (2^n n!)."""
    with mpmath.workdps(prec.dps):
        s = _mp(s)
        scale = mpmath.mpf(2) ** (-s)
        tight = prec.with_tolerance(prec.target_tolerance / max(float(abs(scale)), 1.0))
        j = _promain_core(s, mpmath.mpf(1) / 2, _mp(x_free), tight, "beta-free-parameter")
        value = j.value * scale
        return NumericValue(value, j.error_bound * abs(scale) + _rounding(value),
                            prec.working_digits, j.method, j.terms)


# --- integral representations --------------------------------------------------


def _quad(f, T, tol, label):
    """int_0^T f by tanh-sinh with level doubling, subdividing until the estimate <= tol."""
    pieces = max(2, int(mpmath.ceil(T)))
    for _ in range(6):
        pts = mpmath.linspace(0, T, pieces + 1)
        value, err = mpmath.quad(f, pts, error=True, maxdegree=10)
        # the node-difference estimate can claim more than the guard-free digits support
        err = max(err, abs(value) * mpmath.mpf(10) ** (GUARD_DIGITS - mpmath.mp.dps))
        if err <= tol:
            return value, err, pieces
        pieces *= 2
    raise PrecisionError(f"{label}: quadrature error {mpmath.nstr(err, 3)} above {mpmath.nstr(tol, 3)}")


def _cutoff(tail: Callable[[mpmath.mpf], mpmath.mpf], tol, prec: Precision, start=4):
    if prec.quadrature_tail_cutoff > 0:
        T = mpmath.mpf(prec.quadrature_tail_cutoff)
        return T, tail(T)
    T = mpmath.mpf(start)
    # the truncated tail has one sign, so leave it far below the tolerance
    while True:
        b = tail(T)
        if b <= tol / 64:
            return T, b
        T *= mpmath.mpf(3) / 2
        if T > 1e6:
            raise PrecisionError("no tail cutoff meets the tolerance")


def _upper_gamma_value(s, x):
    eps = mpmath.mpf(10) ** (-(mpmath.mp.dps - 5))
    val, err, _ = _upper_gamma(s, x, eps)
    return abs(val) + err


def _power_substituted(g, s, T):
    """int_0^T t^(s-1) g(t) dt rewritten as (1/s) int_0^(T^s) g(u^(1/s)) du."""
    return (lambda u: g(u ** (1 / s)) / s), T**s


def eval_J_mellin(s: RealLike, a: RealLike, prec: Precision = QUAD_PRECISION) -> NumericValue:
    """J(s, a) = Gamma(s)^-1 int_0^oo e^{(1-a)t} t^(s-1) / (e^t + 1) dt, s > 0."""
    with mpmath.workdps(prec.dps):
        s, a = _mp(s), _mp(a)
        _positive_real(s, "Mellin J")
        _check_a(a)
        g = mpmath.gamma(s)
        tol = mpmath.mpf(prec.target_tolerance) * g / 2
        # e^{-at} t^{s-1} / (1 + e^-t) <= e^{-at} t^{s-1}
        T, tail = _cutoff(lambda T: _upper_gamma_value(s, a * T) / a**s, tol, prec)

        def g_t(t):
            return mpmath.exp(-a * t) / (1 + mpmath.exp(-t))

        if s < 1:
            f, upper = _power_substituted(g_t, s, T)
        else:
            f, upper = (lambda t: g_t(t) * t ** (s - 1)), T
        integral, err, pieces = _quad(f, upper, tol, "Mellin J")
        value = integral / g
        bound = (err + tail) / g + _rounding(value, 8)
        return NumericValue(value, bound, prec.working_digits, "mellin-integral", pieces)


def eval_lambda_mellin(s: RealLike, prec: Precision = QUAD_PRECISION) -> NumericValue:
    """lambda(s) = Gamma(s)^-1 int_0^oo e^t t^(s-1) / (e^{2t} - 1) dt, s > 1."""
    with mpmath.workdps(prec.dps):
        s = _mp(s)
        if not (mpmath.im(s) == 0 and s > 1):
            raise DomainError("lambda Mellin integral needs real s > 1")
        g = mpmath.gamma(s)
        tol = mpmath.mpf(prec.target_tolerance) * g / 2
        T, tail = _cutoff(lambda T: _upper_gamma_value(s, T) / (1 - mpmath.exp(-2 * T)), tol, prec)

        def h(t):
            # t e^-t / (1 - e^-2t), tends to 1/2 at 0
            if t == 0:
                return mpmath.mpf(1) / 2
            return t * mpmath.exp(-t) / -mpmath.expm1(-2 * t)

        if s < 2:
            f, upper = _power_substituted(h, s - 1, T)
        else:
            f, upper = (lambda t: h(t) * t ** (s - 2)), T
        integral, err, pieces = _quad(f, upper, tol, "lambda Mellin")
        value = integral / g
        bound = (err + tail) / g + _rounding(value, 8)
        return NumericValue(value, bound, prec.working_digits, "mellin-integral", pieces)


def eval_beta_sech(s: RealLike, prec: Precision = QUAD_PRECISION) -> NumericValue:
    """beta(s) = (2 Gamma(s))^-1 int_0^oo t^(s-1) / cosh(t) dt, s > 0."""
    with mpmath.workdps(prec.dps):
        s = _mp(s)
        _positive_real(s, "beta sech integral")
        g = mpmath.gamma(s)
        tol = mpmath.mpf(prec.target_tolerance) * 2 * g / 2
        # 1/cosh t <= 2 e^-t
        T, tail = _cutoff(lambda T: 2 * _upper_gamma_value(s, T), tol, prec)

        def sech(t):
            return 1 / mpmath.cosh(t)

        if s < 1:
            f, upper = _power_substituted(sech, s, T)
        else:
            f, upper = (lambda t: sech(t) * t ** (s - 1)), T
        integral, err, pieces = _quad(f, upper, tol, "beta sech")
        value = integral / (2 * g)
        bound = (err + tail) / (2 * g) + _rounding(value, 8)
        return NumericValue(value, bound, prec.working_digits, "sech-integral", pieces)


def eval_J_hermite(s, a: RealLike, prec: Precision = QUAD_PRECISION) -> NumericValue:
    """J(s, a) = a^-s/2 + 2 int_0^oo (a^2+y^2)^(-s/2) sin(s atan(y/a)) e^{pi y}/(e^{2 pi y} - 1) dy.

    Valid for every complex s; this is the analytic continuation route.
    """
    with mpmath.workdps(prec.dps):
        s, a = _mp(s), _mp(a)
        _check_a(a)
        sigma, tau = mpmath.re(s), mpmath.im(s)
        tol = mpmath.mpf(prec.target_tolerance) / 4
        sin_bound = mpmath.cosh(abs(tau) * mpmath.pi / 2)

        def tail(T):
            T = max(T, a)
            geo = 1 / (1 - mpmath.exp(-2 * mpmath.pi * T))
            if sigma >= 0:
                core = T ** (-sigma) * mpmath.exp(-mpmath.pi * T) / mpmath.pi
            else:
                k = -sigma
                core = mpmath.mpf(2) ** (k / 2) * _upper_gamma_value(k + 1, mpmath.pi * T) / mpmath.pi ** (k + 1)
            return 2 * sin_bound * geo * core

        T, tail_bound = _cutoff(tail, tol, prec)

        def f(y):
            if y == 0:
                return s / (2 * mpmath.pi * a) * a ** (-s)
            kernel = mpmath.exp(-mpmath.pi * y) / -mpmath.expm1(-2 * mpmath.pi * y)
            return (a * a + y * y) ** (-s / 2) * mpmath.sin(s * mpmath.atan(y / a)) * kernel

        integral, err, pieces = _quad(f, T, tol, "Hermite J")
        value = a ** (-s) / 2 + 2 * integral
        bound = 2 * (err + tail_bound) + _rounding(value, 8)
        return NumericValue(value, bound, prec.working_digits, "hermite-integral", pieces)


def quad_lemma24(m: int, prec: Precision = QUAD_PRECISION) -> NumericValue:
    """int_0^oo (pi^2+t^2)^m sin(2m atan(t/pi)) e^t/(e^{2t}-1) dt (expected pi^(2m+1)/4)."""
    if m < 1:
        raise DomainError("quad_lemma24 needs m >= 1")
    with mpmath.workdps(prec.dps):
        pi = mpmath.pi
        # the tolerance is relative to the size of the answer
        tol = mpmath.mpf(prec.target_tolerance) * pi ** (2 * m + 1) / 8

        def tail(T):
            T = max(T, pi)
            return mpmath.mpf(2) ** m * _upper_gamma_value(2 * m + 1, T) / (1 - mpmath.exp(-2 * T))

        T, tail_bound = _cutoff(tail, tol, prec, start=8)

        def f(t):
            if t == 0:
                return mpmath.mpf(m) * pi ** (2 * m - 1)
            kernel = mpmath.exp(-t) / -mpmath.expm1(-2 * t)
            return (pi**2 + t**2) ** m * mpmath.sin(2 * m * mpmath.atan(t / pi)) * kernel

        integral, err, pieces = _quad(f, T, tol, "pi-power integral")
        bound = err + tail_bound + _rounding(integral, 8)
        return NumericValue(integral, bound, prec.working_digits, "tanh-sinh", pieces)


# --- numeric identity checks -----------------------------------------------------


def check_lemma21_numeric(a: RealLike, x: RealLike, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    """|(1+ix)^a - (1-ix)^a - 2i (1+x^2)^(a/2) sin(a atan x)|, principal branches."""
    with mpmath.workdps(prec.dps):
        a, x = _mp(a), _mp(x)
        lhs = (1 + 1j * x) ** a - (1 - 1j * x) ** a
        rhs = 2j * (1 + x * x) ** (a / 2) * mpmath.sin(a * mpmath.atan(x))
        residual = abs(lhs - rhs)
        scale = abs((1 + x * x) ** (a / 2)) * 4
        return NumericValue(residual, _rounding(scale, 16), prec.working_digits, "complex-arithmetic", 1)


def check_promain2(s: RealLike, a: RealLike, N: int, prec: Precision = DEFAULT_PRECISION) -> NumericValue:
    """Residual of the shifted-argument expansion of Gamma(s) J(s, a), truncated after N terms.

    residual = Gamma(s) J(s, a) - [Gamma(s) ((a+1)^(1-s) - a^(1-s)) / (2(s-1))
                                   - sum_{n=1}^N 2^n Gamma(s+n)/(n+1)! J(s+n, a)]

    The returned bound carries the propagated J errors plus the magnitude of
    the first omitted term as the truncation estimate.
    """
    if N < 0:
        raise DomainError("N must be nonnegative")
    with mpmath.workdps(prec.dps):
        s, a = _mp(s), _mp(a)
        if not (mpmath.im(s) == 0 and s > 1):
            raise DomainError("check_promain2 needs real s > 1")
        _check_a(a)
        g = mpmath.gamma(s)
        j0 = eval_J_direct(s, a, prec)
        lhs = g * j0.value
        err = g * j0.error_bound
        rhs = g * ((a + 1) ** (1 - s) - a ** (1 - s)) / (2 * (s - 1))

        def coeff(n):
            return mpmath.mpf(2) ** n * mpmath.gamma(s + n) / mpmath.factorial(n + 1)

        for n in range(1, N + 1):
            jn = eval_J_direct(s + n, a, prec)
            rhs -= coeff(n) * jn.value
            err += coeff(n) * jn.error_bound
        next_term = coeff(N + 1) * eval_J_direct(s + N + 1, a, prec).value
        residual = abs(lhs - rhs)
        bound = err + abs(next_term) + _rounding(max(abs(lhs), abs(rhs)), 4 * (N + 1))
        return NumericValue(residual, bound, prec.working_digits, "shifted-argument-expansion", N)
