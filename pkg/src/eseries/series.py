"""g(x) = (1 + 1/x)**x, its convergent expansion for x > 1, and an e estimator built on it.

Since g(x) = e * sum_j a_j x**-j exactly for x > 1, dividing g(x) by a truncated
sum gives e up to a relative error of about a_{J+1} x**-(J+1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
from gmpy2 import mpq
from mpmath import mp

from .errors import DomainError, PrefixBoundError
from .exact import CoefficientTable, coefficient_table
from .numeric import GUARD_BITS, check_precision, compute_e, rational_to_mpf, round_to, to_mpf

__all__ = [
    "EEstimate",
    "compute_e",
    "estimate_e",
    "g_direct",
    "g_partial_sum",
    "plan_e_digits",
]

# Extra coefficients beyond J checked against |a_j| <= 1 before trusting the tail model.
PREFIX_MARGIN = 8


def _table(table: CoefficientTable | None, jmax: int) -> CoefficientTable:
    if table is None:
        return coefficient_table(jmax)
    table.require(jmax)
    return table


def _check_x(x, precision_bits):
    xv = to_mpf(x, precision_bits + GUARD_BITS)
    if not xv > 1:
        raise DomainError(f"x must exceed 1, got {x}")
    return xv


def g_direct(x, precision_bits: int):
    """exp(x * log(1 + 1/x)), for x > 1."""
    precision_bits = check_precision(precision_bits)
    xv = _check_x(x, precision_bits)
    with mp.workprec(precision_bits + GUARD_BITS):
        value = mpmath.exp(xv * mpmath.log1p(1 / xv))
    return round_to(value, precision_bits)


def g_partial_sum(x, J: int, precision_bits: int, table: CoefficientTable | None = None):
    """e * sum_{j=0}^{J} a_j x**-j."""
    precision_bits = check_precision(precision_bits)
    xv = _check_x(x, precision_bits)
    table = _table(table, J)
    work = precision_bits + GUARD_BITS
    with mp.workprec(work):
        acc = mpmath.mpf(0)
        inv = 1 / xv
        for j in range(J, -1, -1):
            acc = acc * inv + rational_to_mpf(table[j], work)
        value = compute_e(work) * acc
    return round_to(value, precision_bits)


@dataclass(frozen=True)
class EEstimate:
    value: mpmath.mpf
    x_used: int
    terms_used: int
    tail_bound: mpmath.mpf
    precision_bits: int
    # the tail model rests on |a_j| <= 1 checked over a finite prefix, not on a proof
    bound_kind: str = "validated-empirical"

    @property
    def claimed_digits(self) -> int:
        with mp.workprec(self.precision_bits):
            rel = self.tail_bound / abs(self.value)
            return int(mpmath.floor(-mpmath.log10(rel)))


def _power_of_two_exponent(x) -> int:
    if isinstance(x, bool) or int(x) != x or x < 2 or int(x) & (int(x) - 1):
        raise DomainError(f"x must be an integer power of two >= 2, got {x}")
    return int(x).bit_length() - 1


def estimate_e(x: int, J: int, precision_bits: int, table: CoefficientTable | None = None) -> EEstimate:
    """Estimate e as g(x) / sum_{j<=J} a_j x**-j for x = 2**m.

    The truncated sum is formed exactly (x**-j is a binary shift) and rounded
    once.  With M = max(1, max_{1<=j<=J+8} |a_j|) the relative tail is taken as
    M x**-(J+1) / (1 - 1/x); a prefix coefficient with |a_j| > 1 raises
    :class:`PrefixBoundError` because the model would no longer hold.
    """
    precision_bits = check_precision(precision_bits)
    m = _power_of_two_exponent(x)
    if J < 0:
        raise DomainError(f"J must be >= 0, got {J}")
    table = _table(table, J + PREFIX_MARGIN)
    observed = max((abs(table[j]) for j in range(1, J + PREFIX_MARGIN + 1)), default=mpq(0))
    if observed > 1:
        raise PrefixBoundError(f"max |a_j| over 1 <= j <= {J + PREFIX_MARGIN} is {float(observed)} > 1")
    bound_m = max(mpq(1), observed)

    partial = mpq(0)
    for j in range(J + 1):
        partial += table[j] / mpq(2) ** (m * j)
    work = precision_bits + GUARD_BITS
    g = g_direct(int(x), work)
    with mp.workprec(work):
        value = g / rational_to_mpf(partial, work)
    value = round_to(value, precision_bits)
    tail = bound_m / (mpq(2) ** (m * (J + 1)) * (1 - mpq(1, 2**m)))
    with mp.workprec(precision_bits):
        tail_bound = rational_to_mpf(tail, precision_bits) * abs(value)
    return EEstimate(value, int(x), J, tail_bound, precision_bits)


def plan_e_digits(digits: int, m: int = 16) -> tuple[int, int, int]:
    """Choose (x, J, precision_bits) so the tail model promises ``digits`` decimals at x = 2**m."""
    if digits < 1:
        raise DomainError(f"digits must be >= 1, got {digits}")
    need_bits = digits * math.log2(10) + 2
    J = max(0, math.ceil(need_bits / m) - 1)
    precision_bits = max(64, math.ceil(need_bits) + 64)
    return 2**m, J, precision_bits
