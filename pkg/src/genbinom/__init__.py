"""Exact computation and verification of generalized binomial coefficients."""

from .coefficients import (
    CheckResult,
    GBKey,
    GBTable,
    gb,
    gb_alt,
    gb_canonical,
    gb_def,
    gb_second,
    gb_sum,
    gb_symmetric,
    gb_table,
    special_value,
)
from .partitions import MultiIndex, Partition, conjecture_coeffs, enumerate_partitions
from .series import BiPoly, Poly

__version__ = "0.1.0"
