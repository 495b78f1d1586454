"""Exact arithmetic for the continuants of a three-limit continued fraction.

Submodules: ``monoid_ring`` (noncommutative integer polynomials),
``continuants`` (recurrences), ``combinatorics`` (families and signs),
``identities`` (counting tables and exact identity checks), ``cli``.
"""

from .combinatorics import (
    combinatorial_A,
    combinatorial_C,
    combinatorial_D,
    combinatorial_G,
    combinatorial_H,
    combinatorial_P,
    combinatorial_Q,
    combinatorial_R,
    enumerate_family,
    enumerate_seq_family,
    g,
    g_direct,
)
from .continuants import (
    c_poly,
    d_poly,
    delta,
    em_denominator,
    em_numerator,
    g_poly,
    h_poly,
    k_denominator,
    k_numerator,
    periodic,
    phi,
    r_poly,
)
from .identities import (
    TABLES,
    VerificationReport,
    fibonacci_via_formulas,
    gf_coefficients,
    pell_via_formulas,
    sequence,
    verify,
    verify_all,
)
from .monoid_ring import Generator, Polynomial, a, b

__version__ = "0.1.0"

__all__ = [
    "Generator", "Polynomial", "a", "b",
    "em_numerator", "em_denominator", "k_numerator", "k_denominator", "r_poly",
    "c_poly", "d_poly", "g_poly", "h_poly", "periodic", "phi", "delta",
    "enumerate_family", "enumerate_seq_family", "g", "g_direct",
    "combinatorial_A", "combinatorial_R", "combinatorial_P", "combinatorial_Q",
    "combinatorial_C", "combinatorial_D", "combinatorial_G", "combinatorial_H",
    "TABLES", "VerificationReport", "sequence", "gf_coefficients", "verify", "verify_all",
    "fibonacci_via_formulas", "pell_via_formulas",
]
