"""Exact Bernoulli numbers, Stirling numbers and partial Bell polynomials."""

from ._core import (
    __version__,
    bell,
    bell_egf_coeff,
    bell_reciprocal_args,
    bell_scaling_identity,
    bell_zero_one,
    bernoulli,
    bernoulli_series,
    binomial,
    cross_verify,
    factorial,
    identity_suite,
    methods,
    power_sum_coeffs,
    stirling,
    stirling_egf_coeff,
    stirling_explicit,
    stirling_table,
    supports,
)

__all__ = [
    "bell",
    "bell_egf_coeff",
    "bell_reciprocal_args",
    "bell_scaling_identity",
    "bell_zero_one",
    "bernoulli",
    "bernoulli_series",
    "binomial",
    "cross_verify",
    "factorial",
    "identity_suite",
    "methods",
    "power_sum_coeffs",
    "stirling",
    "stirling_egf_coeff",
    "stirling_explicit",
    "stirling_table",
    "supports",
]
