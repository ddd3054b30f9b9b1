"""Odd multiperfect numbers: 2-adic valuations, shapes, Euler-part checks,
nonexistence certificates and brute-force search.

Integers are plain Python ints of any size. Structured results are dicts with
the same layout as the ``oddmp`` command's JSON output.
"""

from ._core import (
    InvariantViolation,
    PreconditionError,
    abundancy,
    big_omega,
    broughan_zhou,
    certify,
    factor,
    fermat_criterion,
    half_sigma_mod8,
    is_prime,
    mod16_solutions,
    nu,
    nu2_sigma,
    nu2_sigma_minus_one,
    omega_obstruction,
    oracle,
    oracle_families,
    ord,
    search,
    shapes,
    sigma,
    sigma_coprime_to_q,
    split,
    verify_certificate,
)

__all__ = [
    "InvariantViolation",
    "PreconditionError",
    "abundancy",
    "big_omega",
    "broughan_zhou",
    "certify",
    "factor",
    "fermat_criterion",
    "half_sigma_mod8",
    "is_prime",
    "mod16_solutions",
    "nu",
    "nu2_sigma",
    "nu2_sigma_minus_one",
    "omega_obstruction",
    "oracle",
    "oracle_families",
    "ord",
    "search",
    "shapes",
    "sigma",
    "sigma_coprime_to_q",
    "split",
    "verify_certificate",
]

__version__ = "0.1.0"
