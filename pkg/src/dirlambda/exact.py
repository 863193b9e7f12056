"""Exact rational layer: Bernoulli and Euler numbers and polynomials.

Rationals are :class:`fractions.Fraction` throughout; ``Fraction`` already
keeps numerator and denominator reduced with a positive denominator.

All tables are memoized and grown under a lock, so first use from several
threads is safe.  Call :func:`precompute` once before fanning out work if
you want every later read to be lock-free in practice.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from functools import lru_cache
from typing import Iterable, Union

__all__ = [
    "BigRational",
    "RationalPolynomial",
    "DEFAULT_MAX_INDEX",
    "binomial",
    "bernoulli_number",
    "bernoulli_polynomial",
    "euler_polynomial",
    "euler_poly_at",
    "euler_zero",
    "euler_number",
    "precompute",
    "clear_tables",
]

BigRational = Fraction
Number = Union[int, Fraction]

# Tables grow on demand; this is only the size reached by precompute().
DEFAULT_MAX_INDEX = 200


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k > n or k < 0."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense polynomial with rational coefficients, ``coefficients[k]`` of x**k.

    Trailing zeros are stripped on construction, so equal polynomials compare
    equal and the zero polynomial has an empty coefficient tuple.
    """

    coefficients: tuple[Fraction, ...] = ()

    def __init__(self, coefficients: Iterable[Number] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        """Highest index with a nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return Fraction(0)

    def __add__(self, other: RationalPolynomial) -> RationalPolynomial:
        n = max(len(self.coefficients), len(other.coefficients))
        return RationalPolynomial(self[k] + other[k] for k in range(n))

    def __neg__(self) -> RationalPolynomial:
        return RationalPolynomial(-c for c in self.coefficients)

    def __sub__(self, other: RationalPolynomial) -> RationalPolynomial:
        return self + (-other)

    def __mul__(self, other: RationalPolynomial | Number) -> RationalPolynomial:
        if not isinstance(other, RationalPolynomial):
            return RationalPolynomial(c * other for c in self.coefficients)
        if not self.coefficients or not other.coefficients:
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(c) == 1:
                term = mono
            else:
                term = f"{abs(c)}{'*' if mono else ''}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


_lock = threading.RLock()
_bernoulli: list[Fraction] = [Fraction(1)]
_euler_zero: list[Fraction] = [Fraction(1)]
_euler_polys: dict[int, RationalPolynomial] = {}
_bernoulli_polys: dict[int, RationalPolynomial] = {}


def _check_index(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"index must be a nonnegative integer, got {n!r}")


def _grow_bernoulli(n: int) -> None:
    # sum_{k=0}^{j} C(j+1, k) B_k = 0 for j >= 1
    with _lock:
        for j in range(len(_bernoulli), n + 1):
            s = sum(comb(j + 1, k) * _bernoulli[k] for k in range(j))
            _bernoulli.append(-s / (j + 1))


def _grow_euler_zero(n: int) -> None:
    # E_j(0) = -(1/2) sum_{k<j} C(j, k) E_k(0), from 2 = (e^t + 1) sum E_j(0) t^j/j!
    with _lock:
        for j in range(len(_euler_zero), n + 1):
            s = sum(comb(j, k) * _euler_zero[k] for k in range(j))
            _euler_zero.append(-s / 2)


def bernoulli_number(n: int) -> Fraction:
    """B_n with B_1 = -1/2 (generating function t/(e^t - 1))."""
    _check_index(n)
    if n >= len(_bernoulli):
        _grow_bernoulli(n)
    return _bernoulli[n]


def euler_zero(n: int) -> Fraction:
    """E_n(0), the constant term of the n-th Euler polynomial."""
    _check_index(n)
    if n >= len(_euler_zero):
        _grow_euler_zero(n)
    return _euler_zero[n]


def bernoulli_polynomial(n: int) -> RationalPolynomial:
    """B_n(x) = sum_k C(n, k) B_k x^(n-k)."""
    _check_index(n)
    poly = _bernoulli_polys.get(n)
    if poly is None:
        coeffs = [comb(n, j) * bernoulli_number(n - j) for j in range(n + 1)]
        poly = RationalPolynomial(coeffs)
        with _lock:
            _bernoulli_polys.setdefault(n, poly)
    return poly


def euler_polynomial(n: int) -> RationalPolynomial:
    """E_n(x), the coefficients of 2 e^{xt} / (e^t + 1).

    Built from the constant terms: E_n(x) = sum_k C(n, k) E_k(0) x^(n-k).
    """
    _check_index(n)
    poly = _euler_polys.get(n)
    if poly is None:
        euler_zero(n)
        coeffs = [comb(n, j) * _euler_zero[n - j] for j in range(n + 1)]
        poly = RationalPolynomial(coeffs)
        with _lock:
            _euler_polys.setdefault(n, poly)
    return poly


def euler_poly_at(n: int, q: Number) -> Fraction:
    """Exact E_n(q) for rational q."""
    _check_index(n)
    q = Fraction(q)
    euler_zero(n)
    total = Fraction(0)
    power = Fraction(1)
    # sum over k descending so power tracks q^(n-k)
    for k in range(n, -1, -1):
        ek = _euler_zero[k]
        if ek:
            total += comb(n, k) * ek * power
        power *= q
    return total


@lru_cache(maxsize=None)
def euler_number(n: int) -> int:
    """Integer Euler number E_n = 2^n E_n(1/2); 1, 0, -1, 0, 5, 0, -61, ..."""
    value = euler_poly_at(n, Fraction(1, 2)) * 2**n
    assert value.denominator == 1
    return value.numerator


def precompute(max_index: int = DEFAULT_MAX_INDEX) -> None:
    """Fill the Bernoulli and Euler tables up to ``max_index``."""
    _grow_bernoulli(max_index)
    _grow_euler_zero(max_index + 1)


def clear_tables() -> None:
    """Drop every memoized value (used to check memoization is transparent)."""
    with _lock:
        del _bernoulli[1:]
        del _euler_zero[1:]
        _euler_polys.clear()
        _bernoulli_polys.clear()
    euler_number.cache_clear()


def as_fraction(value: Union[str, Number]) -> Fraction:
    """Parse ``"p/q"``, an int or a Fraction; rejects zero denominators."""
    try:
        return Fraction(value)
    except ZeroDivisionError as exc:
        raise ValueError(f"zero denominator in {value!r}") from exc

