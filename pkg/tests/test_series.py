from fractions import Fraction

import mpmath
import pytest
from mpmath import mp

from eseries.errors import DomainError, PrefixBoundError, TableTooShortError
from eseries.exact import CoefficientTable, coefficient_table
from eseries.numeric import compute_e
from eseries.series import estimate_e, g_direct, g_partial_sum, plan_e_digits
from gmpy2 import mpq


def test_g_direct_exact_powers():
    with mp.workprec(128):
        assert abs(g_direct(2, 128) - mpmath.mpf(9) / 4) < 1e-36
        assert abs(g_direct(3, 128) - mpmath.mpf(64) / 27) < 1e-36


def test_g_direct_approaches_e():
    e = compute_e(128)
    with mp.workprec(128):
        gaps = [abs(g_direct(10**k, 128) - e) for k in (2, 4, 8)]
    assert gaps[0] > gaps[1] > gaps[2]
    with mp.workprec(128):
        # g(x) = e (1 - 1/(2x) + ...)
        assert abs(gaps[2] * 2 * 10**8 / e - 1) < 1e-7


@pytest.mark.parametrize("x", [1, Fraction(1, 2), 0, -3])
def test_domain(x):
    with pytest.raises(DomainError):
        g_direct(x, 64)
    with pytest.raises(DomainError):
        g_partial_sum(x, 3, 64)


def test_partial_sum_single_term_is_e():
    with mp.workprec(128):
        assert g_partial_sum(2, 0, 128) == compute_e(128)


def test_partial_sum_at_two():
    nine_quarters = mpmath.mpf(9) / 4
    with mp.workprec(128):
        err40 = abs(g_partial_sum(2, 40, 128) - nine_quarters)
        err41 = abs(g_partial_sum(2, 41, 128) - nine_quarters)
    assert err40 <= 1e-11
    assert 0.4 <= err41 / err40 <= 0.6


def test_partial_sum_table_too_short():
    with pytest.raises(TableTooShortError):
        g_partial_sum(2, 10, 64, table=coefficient_table(5))


@pytest.mark.parametrize("x", [2, 3, 10])
def test_geometric_convergence_rate(x):
    bits = 320
    table = coefficient_table(61)
    target = g_direct(x, bits)
    with mp.workprec(bits):
        errors = [abs(g_partial_sum(x, J, bits, table) - target) for J in range(10, 62)]
        ratios = [errors[i + 1] / errors[i] for i in range(len(errors) - 1)]
    assert all(abs(r - mpmath.mpf(1) / x) <= 0.15 for r in ratios)


def test_slow_convergence_just_above_one():
    x = mpmath.mpf("1.05")
    target = g_direct(x, 128)
    with mp.workprec(128):
        errs = [abs(g_partial_sum(x, J, 128) - target) for J in (100, 200, 400)]
    assert errs[0] > errs[1] > errs[2]


def test_estimate_e_j4():
    est = estimate_e(2**16, 4, 320)
    with mp.workprec(320):
        err = abs(est.value - compute_e(320))
    assert err < mpmath.mpf(10) ** -18
    assert err <= est.tail_bound
    assert est.claimed_digits >= 18
    assert est.bound_kind == "validated-empirical"


def test_estimate_e_j16():
    est = estimate_e(2**16, 16, 320)
    with mp.workprec(320):
        err = abs(est.value - compute_e(320))
    assert err < mpmath.mpf(10) ** -50
    assert err <= est.tail_bound


def test_estimate_e_without_correction_is_g():
    x = 2**16
    est = estimate_e(x, 0, 128)
    e = compute_e(128)
    with mp.workprec(128):
        assert est.value == g_direct(x, 128)
        # first-order gap from a_1 = -1/2
        assert abs((e - est.value) / (e / (2 * x)) - 1) < 1e-4


@pytest.mark.parametrize("x, J", [(2, 10), (4, 20), (256, 7), (2**16, 2), (2**20, 5)])
def test_estimate_within_its_tail_bound(x, J):
    est = estimate_e(x, J, 256)
    with mp.workprec(256):
        assert abs(est.value - compute_e(256)) <= est.tail_bound


@pytest.mark.parametrize("x", [3, 6, 1, 0, 2.0000001])
def test_estimate_e_requires_power_of_two(x):
    with pytest.raises(DomainError):
        estimate_e(x, 3, 128)


def test_estimate_e_rejects_large_prefix_coefficient():
    fake = CoefficientTable((mpq(1), mpq(-1, 2), mpq(3, 2)) + tuple(mpq(0) for _ in range(20)))
    with pytest.raises(PrefixBoundError):
        estimate_e(4, 2, 128, table=fake)


def test_plan_e_digits_delivers():
    for digits in (10, 50, 120):
        x, J, bits = plan_e_digits(digits)
        est = estimate_e(x, J, bits)
        assert est.claimed_digits >= digits
        with mp.workprec(bits):
            assert abs(est.value - compute_e(bits)) < mpmath.mpf(10) ** -digits
