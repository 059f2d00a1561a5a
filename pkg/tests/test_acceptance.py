"""End-to-end acceptance checks, one test per criterion.

Each test records a one-line verdict that is printed in the terminal summary
and also printed inline (visible with ``-s``), then asserts.
"""

import time
from fractions import Fraction

import mpmath
import pytest
from mpmath import mp

from conftest import ACCEPTANCE_RESULTS, BIG_J
from eseries.asymptotics import residual_sweep, sweep_summary
from eseries.exact import coefficient_c, coefficient_table
from eseries.numeric import compute_e
from eseries.partitions import (
    a_via_partitions,
    enumerate_partitions,
    hardy_ramanujan,
    partition_count,
)
from eseries.quadrature import adaptive_cauchy
from eseries.series import estimate_e, g_partial_sum

pytestmark = pytest.mark.acceptance


def record(number, ok, text):
    ACCEPTANCE_RESULTS.append((number, bool(ok), text))
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}")
    assert ok, text


def test_criterion_1_recursion_equals_partition_sum():
    start = time.perf_counter()
    table = coefficient_table(35, fresh=True)
    bad = [j for j in range(36) if Fraction(int(table[j].numerator), int(table[j].denominator))
           != a_via_partitions(j)]
    elapsed = time.perf_counter() - start
    record(1, not bad and elapsed < 60,
           f"recursion == partition sum for j<=35 (mismatches {bad}), {elapsed:.1f}s < 60s")


def test_criterion_2_sign_alternation(big_build):
    table, seconds = big_build
    bad = [j for j in range(BIG_J + 1) if (table[j] > 0) != (j % 2 == 0) or table[j] == 0]
    record(2, not bad and seconds < 120,
           f"sign(a_j) = (-1)^j for j<=5000 ({len(bad)} violations), build {seconds:.1f}s < 120s")


def test_criterion_3_convergence_at_two():
    bits = 192
    table = coefficient_table(61)
    with mp.workprec(bits):
        target = mpmath.mpf(9) / 4
        errors = {J: abs(g_partial_sum(2, J, bits, table) - target) for J in range(20, 62)}
        ratios = [errors[J + 1] / errors[J] for J in range(20, 61)]
    lo, hi = min(ratios), max(ratios)
    ok = errors[40] <= 1e-11 and 0.4 <= lo and hi <= 0.6
    record(3, ok, f"x=2: err(J=40) = {mpmath.nstr(errors[40], 4)} <= 1e-11, "
                  f"ratios over J in [20,60] in [{mpmath.nstr(lo, 4)}, {mpmath.nstr(hi, 4)}] within [0.4, 0.6]")


def test_criterion_4_remainder_order(big_table):
    start = time.perf_counter()
    recs = residual_sweep(10, BIG_J, 128, big_table)
    low_max, _ = sweep_summary([r for r in recs if r.j <= 1000])
    high_max, high_median = sweep_summary([r for r in recs if r.j >= 1000])
    worst = mpmath.mpf(0)
    with mp.workprec(128):
        for r in recs:
            if r.j >= 1000:
                gap = abs(abs(r.c) - 1 - mpmath.mpf(1) / r.j)
                worst = max(worst, gap / (10 * mpmath.log(r.j) / r.j**2))
    elapsed = time.perf_counter() - start
    ok = high_max <= 1.5 * low_max and worst <= 1 and elapsed < 300
    record(4, ok, f"max scaled [1000,5000] = {mpmath.nstr(high_max, 5)} <= 1.5 x {mpmath.nstr(low_max, 5)}; "
                  f"envelope use {mpmath.nstr(worst, 3)} <= 1; median {mpmath.nstr(high_median, 4)}; "
                  f"{elapsed:.1f}s < 300s")


def test_criterion_5_modulus_tends_to_one(big_table):
    with mp.workprec(128):
        gap = abs(abs(coefficient_c(big_table, BIG_J, 128)) - 1)
    record(5, gap <= 3e-4, f"||c_5000| - 1| = {mpmath.nstr(gap, 5)} <= 3e-4")


def test_criterion_6_quadrature_agreement(small_table):
    start = time.perf_counter()
    tol = mpmath.mpf("1e-25")
    worst = mpmath.mpf(0)
    for j in range(51):
        est, _ = adaptive_cauchy(j, Fraction(1, 2), tol, 320)
        with mp.workprec(320):
            worst = max(worst, abs(est - coefficient_c(small_table, j, 320)))
    spread = mpmath.mpf(0)
    for j in range(31):
        near, _ = adaptive_cauchy(j, Fraction(2, 5), tol, 320)
        far, _ = adaptive_cauchy(j, Fraction(3, 5), tol, 320)
        with mp.workprec(320):
            spread = max(spread, abs(near - far))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-20 and spread <= 1e-18 and elapsed < 120
    record(6, ok, f"r=1/2 max error j<=50 = {mpmath.nstr(worst, 3)} <= 1e-20; "
                  f"r=0.4 vs 0.6 spread j<=30 = {mpmath.nstr(spread, 3)} <= 1e-18; {elapsed:.1f}s < 120s")


def test_criterion_7_e_digits():
    start = time.perf_counter()
    est = estimate_e(2**16, 16, 320)
    oracle = compute_e(320)
    elapsed = time.perf_counter() - start
    with mp.workprec(320):
        err = abs(est.value - oracle)
        digits = int(mpmath.floor(-mpmath.log10(err))) if err else 320
    ok = err <= mpmath.mpf(10) ** -50 and err <= est.tail_bound and elapsed < 5
    record(7, ok, f"x=2^16, J=16: {digits} correct digits >= 50, error {mpmath.nstr(err, 3)} "
                  f"<= tail bound {mpmath.nstr(est.tail_bound, 3)}; {elapsed:.2f}s < 5s")


def test_criterion_8_partition_growth():
    start = time.perf_counter()
    bad = [j for j in range(41) if sum(1 for _ in enumerate_partitions(j)) != partition_count(j)]
    gaps = []
    for j in (50, 500, 5000):
        hr = hardy_ramanujan(j, 128)
        with mp.workprec(128):
            gaps.append(abs(partition_count(j) / hr - 1))
    elapsed = time.perf_counter() - start
    ok = not bad and gaps[0] > gaps[1] > gaps[2] and elapsed < 30
    shown = ", ".join(mpmath.nstr(g, 4) for g in gaps)
    record(8, ok, f"counts match enumeration for j<=40 ({len(bad)} mismatches); "
                  f"|P/HR - 1| at 50, 500, 5000 = {shown} strictly decreasing; {elapsed:.1f}s < 30s")
