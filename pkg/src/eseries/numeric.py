"""Configurable-precision reals and complexes on top of mpmath.

Every routine in the package takes an explicit ``precision_bits`` and returns
an :class:`mpmath.mpf` / :class:`mpmath.mpc` whose mantissa was rounded to that
many bits.  Callers doing further arithmetic should do so under
``mpmath.workprec``; the global mpmath context is never modified.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath import mp
from mpmath.libmp import from_rational, to_str

BigReal = mpmath.mpf
BigComplex = mpmath.mpc

GUARD_BITS = 32
MIN_PRECISION = 64


def check_precision(precision_bits: int) -> int:
    if int(precision_bits) != precision_bits or precision_bits < MIN_PRECISION:
        raise ValueError(f"precision_bits must be an integer >= {MIN_PRECISION}, got {precision_bits!r}")
    return int(precision_bits)


def rational_to_mpf(q, precision_bits: int) -> mpmath.mpf:
    """Correctly rounded binary value of an exact rational (int, Fraction, mpq)."""
    return mp.make_mpf(from_rational(int(q.numerator), int(q.denominator), precision_bits, "n"))


def to_mpf(x, precision_bits: int) -> mpmath.mpf:
    if isinstance(x, (int, Fraction)) or hasattr(x, "denominator"):
        return rational_to_mpf(x, precision_bits)
    with mp.workprec(precision_bits):
        return +mpmath.mpf(x)


def to_mpc(z, precision_bits: int) -> mpmath.mpc:
    if isinstance(z, mpmath.mpc):
        with mp.workprec(precision_bits):
            return +z
    if isinstance(z, complex):
        with mp.workprec(precision_bits):
            return mpmath.mpc(z)
    return mpmath.mpc(to_mpf(z, precision_bits))


def round_to(x, precision_bits: int):
    with mp.workprec(precision_bits):
        return +x


def _e_binary_split(a: int, b: int) -> tuple[int, int]:
    # sum_{k=a+1}^{b} 1/((a+1)(a+2)...k) == t/q
    if b - a == 1:
        return 1, b
    m = (a + b) // 2
    t1, q1 = _e_binary_split(a, m)
    t2, q2 = _e_binary_split(m, b)
    return t1 * q2 + t2, q1 * q2


def e_series_terms(precision_bits: int) -> int:
    """Smallest K with 2/(K+1)! < 2**-(precision_bits + 8)."""
    target = precision_bits + 9  # (K+1)! > 2**(p+9)
    k, fact = 0, 1
    while fact.bit_length() <= target:
        k += 1
        fact *= k + 1
    return k


@lru_cache(maxsize=64)
def compute_e(precision_bits: int) -> mpmath.mpf:
    """Euler's number from the factorial series sum_{k<=K} 1/k!.

    The truncation remainder is below 2/(K+1)! < 2**-(precision_bits+8), and the
    exact partial sum is rounded once, so the result is within one ulp of e.
    This is deliberately independent of mpmath's built-in constant.
    """
    precision_bits = check_precision(precision_bits)
    k = e_series_terms(precision_bits)
    t, q = _e_binary_split(0, k)
    return mp.make_mpf(from_rational(q + t, q, precision_bits, "n"))


def decimal_digits(precision_bits: int) -> int:
    return max(1, math.ceil(precision_bits * math.log10(2)))


def format_sci(x, digits: int) -> str:
    """Scientific-notation rendering with exactly ``digits`` significant digits."""
    if isinstance(x, mpmath.mpc):
        raise TypeError("format_sci expects a real value")
    raw = x._mpf_ if isinstance(x, mpmath.mpf) else to_mpf(x, max(MIN_PRECISION, 4 * digits))._mpf_
    return to_str(raw, digits, strip_zeros=False,
                  min_fixed=0, max_fixed=0, show_zero_exponent=True)
