import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp

from eseries.numeric import compute_e, e_series_terms, format_sci, rational_to_mpf
from reference import e_reference


def test_compute_e_64_bits():
    assert mpmath.nstr(compute_e(64), 19) == "2.718281828459045235"


def test_compute_e_self_consistent():
    lo, hi = compute_e(256), compute_e(320)
    with mp.workprec(320):
        assert abs(lo - hi) < mpmath.ldexp(1, -(256 - 8))


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=64, max_value=3000))
def test_compute_e_against_mpmath_constant(bits):
    with mp.workprec(bits + 40):
        ref = +mpmath.e
        assert abs(compute_e(bits) - ref) <= mpmath.ldexp(1, -bits + 2)


@pytest.mark.parametrize("bits", [64, 128, 1000])
def test_series_length_meets_tail_target(bits):
    k = e_series_terms(bits)
    assert 2 * 2 ** (bits + 8) < math.factorial(k + 1)
    assert not 2 * 2 ** (bits + 8) < math.factorial(k)


def test_rational_to_mpf_is_correctly_rounded():
    x = rational_to_mpf(Fraction(1, 3), 70)
    with mp.workprec(200):
        assert abs(x - mpmath.mpf(1) / 3) <= mpmath.ldexp(1, -71)


def test_format_sci_keeps_high_precision_digits():
    text = format_sci(compute_e(256), 50)
    assert text == mpmath.nstr(e_reference(70), 50, strip_zeros=False) + "e+0"
    assert format_sci(mpmath.mpf(0), 5) == "0.0e+0"
    assert format_sci(-rational_to_mpf(Fraction(1, 8000), 64), 3) == "-1.25e-4"
