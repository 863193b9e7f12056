"""Closed-form special values as exact rational multiples of powers of pi."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Union

import mpmath

from .exact import bernoulli_number, euler_number, euler_poly_at, euler_zero

__all__ = [
    "PiPower",
    "MixedExponentError",
    "zeta_even",
    "lambda_even",
    "lambda_from_zeta",
    "beta_odd",
    "eta_even",
    "J_neg_int",
    "beta_neg_int",
    "eta_neg_int",
]


class MixedExponentError(ValueError):
    """Two nonzero PiPower values with different exponents were added."""


@dataclass(frozen=True)
class PiPower:
    """The exact value ``coefficient * pi**exponent``.

    Zero is always stored with exponent 0.  Sums are only defined when the
    exponents agree or one side is zero.
    """

    coefficient: Fraction
    exponent: int = 0

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError("PiPower exponent must be nonnegative")
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        if self.coefficient == 0:
            object.__setattr__(self, "exponent", 0)

    @classmethod
    def zero(cls) -> PiPower:
        return cls(Fraction(0), 0)

    def is_zero(self) -> bool:
        return self.coefficient == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: PiPower) -> PiPower:
        if not isinstance(other, PiPower):
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.exponent != other.exponent:
            raise MixedExponentError(
                f"cannot add pi^{self.exponent} and pi^{other.exponent} terms"
            )
        return PiPower(self.coefficient + other.coefficient, self.exponent)

    def __neg__(self) -> PiPower:
        return PiPower(-self.coefficient, self.exponent)

    def __sub__(self, other: PiPower) -> PiPower:
        return self + (-other)

    def __mul__(self, other: Union[PiPower, Fraction, int]) -> PiPower:
        if isinstance(other, PiPower):
            return PiPower(
                self.coefficient * other.coefficient, self.exponent + other.exponent
            )
        if isinstance(other, (int, Fraction)):
            return PiPower(self.coefficient * other, self.exponent)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: Union[Fraction, int]) -> PiPower:
        return PiPower(self.coefficient / other, self.exponent)

    def to_mpf(self) -> mpmath.mpf:
        """Numeric value at the current mpmath precision."""
        return mpmath.mpf(self.coefficient.numerator) / self.coefficient.denominator * (
            mpmath.pi**self.exponent
        )

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.coefficient)
        pi = "pi" if self.exponent == 1 else f"pi^{self.exponent}"
        return f"{self.coefficient}*{pi}"


def pi_power(exponent: int, coefficient: Union[Fraction, int] = 1) -> PiPower:
    return PiPower(Fraction(coefficient), exponent)


def zeta_even(m: int) -> PiPower:
    """zeta(2m) = (-1)^(m-1) B_2m 2^2m / (2 (2m)!) pi^2m; zeta(0) = -1/2."""
    if m < 0:
        raise ValueError("zeta_even needs m >= 0")
    if m == 0:
        return PiPower(Fraction(-1, 2), 0)
    coeff = (-1) ** (m - 1) * bernoulli_number(2 * m) * 2 ** (2 * m) / (2 * factorial(2 * m))
    return PiPower(coeff, 2 * m)


def lambda_even(m: int) -> PiPower:
    """lambda(2m) = (-1)^m pi^2m / (4 (2m-1)!) E_{2m-1}(0), m >= 1."""
    if m < 1:
        raise ValueError("lambda_even needs m >= 1")
    coeff = (-1) ** m * euler_zero(2 * m - 1) / (4 * factorial(2 * m - 1))
    return PiPower(coeff, 2 * m)


def lambda_from_zeta(m: int) -> PiPower:
    """(1 - 2^-2m) zeta(2m); must agree with :func:`lambda_even`."""
    if m < 1:
        raise ValueError("lambda_from_zeta needs m >= 1")
    return zeta_even(m) * (1 - Fraction(1, 2 ** (2 * m)))


def beta_odd(m: int) -> PiPower:
    """beta(2m+1) = (-1)^m E_2m / (2 (2m)!) (pi/2)^(2m+1), m >= 0."""
    if m < 0:
        raise ValueError("beta_odd needs m >= 0")
    coeff = Fraction((-1) ** m * euler_number(2 * m), 2 * factorial(2 * m) * 2 ** (2 * m + 1))
    return PiPower(coeff, 2 * m + 1)


def eta_even(m: int) -> PiPower:
    """eta(2m) = (1 - 2^(1-2m)) zeta(2m), m >= 1."""
    if m < 1:
        raise ValueError("eta_even needs m >= 1")
    return zeta_even(m) * (1 - Fraction(2, 2 ** (2 * m)))


def J_neg_int(k: int, a: Union[Fraction, int, str]) -> Fraction:
    """J(-k, a) = E_k(a) / 2 for 0 < a <= 1."""
    if k < 0:
        raise ValueError("J_neg_int needs k >= 0")
    a = Fraction(a)
    if not 0 < a <= 1:
        raise ValueError(f"J_neg_int needs 0 < a <= 1, got {a}")
    return euler_poly_at(k, a) / 2


def beta_neg_int(k: int) -> Fraction:
    """beta(-k) = E_k / 2."""
    if k < 0:
        raise ValueError("beta_neg_int needs k >= 0")
    return Fraction(euler_number(k), 2)


def eta_neg_int(k: int) -> Fraction:
    """eta(-k) = (-1)^k E_k(0) / 2."""
    if k < 0:
        raise ValueError("eta_neg_int needs k >= 0")
    return (-1) ** k * euler_zero(k) / 2
