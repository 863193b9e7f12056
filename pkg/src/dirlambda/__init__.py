"""Exact and numeric tools for Dirichlet's lambda, beta and eta functions
and the alternating Hurwitz zeta function J(s, a)."""

__version__ = "0.1.0"

from .closed_forms import (
    MixedExponentError,
    PiPower,
    beta_neg_int,
    beta_odd,
    eta_even,
    eta_neg_int,
    J_neg_int,
    lambda_even,
    lambda_from_zeta,
    zeta_even,
)
from .exact import (
    BigRational,
    RationalPolynomial,
    bernoulli_number,
    bernoulli_polynomial,
    euler_number,
    euler_poly_at,
    euler_polynomial,
    euler_zero,
    precompute,
)
from .identities import IdentityReport, SuiteConfig, run_suite
from .numeric import NumericValue, Precision

__all__ = [
    "__version__",
    "BigRational",
    "RationalPolynomial",
    "bernoulli_number",
    "bernoulli_polynomial",
    "euler_number",
    "euler_poly_at",
    "euler_polynomial",
    "euler_zero",
    "precompute",
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
    "IdentityReport",
    "SuiteConfig",
    "run_suite",
    "NumericValue",
    "Precision",
]
