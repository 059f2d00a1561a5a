"""Large-j behavior c_j = (-1)**j (1 + 1/j) + eta_j with eta_j = O(log j / j**2).

The leading term is the sum of the residues at z = 0 of 1/(z**(j+1) (1+z)) and
of -log(1+z)/z**(j+1); eta_j is whatever remains of the exact c_j.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass

import mpmath
from gmpy2 import mpq
from mpmath import mp

from .errors import BranchCutError, DomainError
from .exact import CoefficientTable, coefficient_c, coefficient_table
from .numeric import GUARD_BITS, check_precision, rational_to_mpf, round_to, to_mpc
from .quadrature import f_eval

__all__ = [
    "ResidualRecord",
    "eta",
    "leading_estimate",
    "r_function",
    "r_leading",
    "residual_sweep",
    "sweep_summary",
]


def leading_estimate(j: int) -> mpq:
    """(-1)**j (1 + 1/j), exactly."""
    if j < 1:
        raise DomainError(f"leading term needs j >= 1, got {j}")
    value = mpq(j + 1, j)
    return value if j % 2 == 0 else -value


@dataclass(frozen=True)
class ResidualRecord:
    j: int
    c: mpmath.mpf
    eta: mpmath.mpf
    scaled: mpmath.mpf | None  # |eta| j**2 / log j; None at j = 1
    precision_bits: int


def eta(j: int, precision_bits: int = 128, table: CoefficientTable | None = None) -> ResidualRecord:
    precision_bits = check_precision(precision_bits)
    if j < 1:
        raise DomainError(f"eta needs j >= 1, got {j}")
    if table is None:
        table = coefficient_table(j)
    work = precision_bits + GUARD_BITS
    c = coefficient_c(table, j, work)
    with mp.workprec(work):
        rem = c - rational_to_mpf(leading_estimate(j), work)
        scaled = None if j == 1 else abs(rem) * j**2 / mpmath.log(j)
    return ResidualRecord(
        j=j,
        c=round_to(c, precision_bits),
        eta=round_to(rem, precision_bits),
        scaled=None if scaled is None else round_to(scaled, precision_bits),
        precision_bits=precision_bits,
    )


def residual_sweep(j_min: int, j_max: int, precision_bits: int = 128,
                   table: CoefficientTable | None = None) -> list[ResidualRecord]:
    if not 2 <= j_min <= j_max:
        raise DomainError(f"need 2 <= j_min <= j_max, got [{j_min}, {j_max}]")
    if table is None:
        table = coefficient_table(j_max)
    else:
        table.require(j_max)
    return [eta(j, precision_bits, table) for j in range(j_min, j_max + 1)]


def sweep_summary(records) -> tuple[mpmath.mpf, mpmath.mpf]:
    """(max, median) of the scaled residuals that are defined."""
    scaled = [r.scaled for r in records if r.scaled is not None]
    if not scaled:
        raise ValueError("no scaled residuals in the sweep")
    return max(scaled), statistics.median(scaled)


def r_function(z, precision_bits: int):
    """R(z) = f(z) - 1/(1+z) + log(1+z), principal branch."""
    precision_bits = check_precision(precision_bits)
    zv = to_mpc(z, precision_bits + GUARD_BITS)
    if zv.imag == 0 and zv.real <= -1:
        raise BranchCutError(f"z = {z} lies on the cut (-inf, -1]")
    # near z = -1, f and 1/(1+z) are ~1/|1+z| while R is ~|1+z| log^2: budget the cancellation
    with mp.workprec(precision_bits + GUARD_BITS):
        delta_mag = abs(1 + zv)
        lost = max(0, int(-2 * mpmath.log(delta_mag, 2))) if delta_mag < 1 else 0
    work = precision_bits + GUARD_BITS + lost
    zv = to_mpc(z, work)
    fz = f_eval(zv, work)
    with mp.workprec(work):
        value = fz - 1 / (1 + zv) + mpmath.log(1 + zv)
    return round_to(value, precision_bits)


def r_leading(z, precision_bits: int):
    """Leading behavior (log(1+z)**2 / 2 - log(1+z)) (1 + z) of R as z -> -1."""
    precision_bits = check_precision(precision_bits)
    work = precision_bits + GUARD_BITS
    zv = to_mpc(z, work)
    with mp.workprec(work):
        lg = mpmath.log(1 + zv)
        value = (lg**2 / 2 - lg) * (1 + zv)
    return round_to(value, precision_bits)
