"""Coefficients of the convergent expansion (1 + 1/x)**x = sum_j c_j x**-j."""

from .exact import CoefficientTable, coefficient_c, coefficient_table, d_weight, extend_table
from .numeric import compute_e

__version__ = "0.1.0"

__all__ = [
    "CoefficientTable",
    "coefficient_c",
    "coefficient_table",
    "compute_e",
    "d_weight",
    "extend_table",
]
