"""Partition-sum oracle for a_j, the partition function, and its Hardy-Ramanujan asymptotic.

The closed form

    a_j = (-1)**j sum_{k_1 + 2 k_2 + ... + j k_j = j} prod_l (1/(l+1))**k_l / k_l!

has P(j) terms, which grows like exp(pi sqrt(2j/3)); it is only used as an
independent check of the recursion for small j.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

import mpmath
from mpmath import mp

from .errors import CostLimitError, DomainError
from .numeric import GUARD_BITS, check_precision, round_to

ORACLE_MAX_J = 80


@dataclass(frozen=True)
class PartitionVector:
    """Multiplicities (k_1, ..., k_j) of the parts 1..j of a partition of ``weight``."""

    multiplicities: tuple[int, ...]
    weight: int

    def __post_init__(self):
        if any(k < 0 for k in self.multiplicities):
            raise ValueError("multiplicities must be nonnegative")
        if sum(l * k for l, k in enumerate(self.multiplicities, start=1)) != self.weight:
            raise ValueError(f"{self.multiplicities} is not a partition of {self.weight}")


def enumerate_partitions(j: int) -> Iterator[PartitionVector]:
    """Yield each multiplicity vector with sum l*k_l == j exactly once.

    Part sizes are fixed from l = j down to 1, trying k_l = 0, 1, ... in turn, so
    the vectors come out in ascending lexicographic order of (k_j, ..., k_1);
    for j = 3 that is (3,0,0), (1,1,0), (0,0,1).
    """
    if j < 0:
        raise DomainError(f"j must be >= 0, got {j}")
    ks = [0] * j

    def descend(l: int, remaining: int):
        if l == 1:
            ks[0] = remaining
            yield PartitionVector(tuple(ks), j)
            return
        for k in range(remaining // l + 1):
            ks[l - 1] = k
            yield from descend(l - 1, remaining - k * l)
        ks[l - 1] = 0

    if j == 0:
        yield PartitionVector((), 0)
        return
    yield from descend(j, j)


@lru_cache(maxsize=None)
def _factorial(n: int) -> int:
    return math.factorial(n)


def a_via_partitions(j: int, max_j: int = ORACLE_MAX_J) -> Fraction:
    """a_j from the explicit partition sum, in exact ``Fraction`` arithmetic."""
    if j < 0:
        raise DomainError(f"j must be >= 0, got {j}")
    if j > max_j:
        raise CostLimitError(f"partition sum for j={j} exceeds the ceiling j <= {max_j} "
                             f"({partition_count(j)} terms)")
    total = Fraction(0)
    for vec in enumerate_partitions(j):
        den = 1
        for l, k in enumerate(vec.multiplicities, start=1):
            if k:
                den *= (l + 1) ** k * _factorial(k)
        total += Fraction(1, den)
    return total if j % 2 == 0 else -total


_p_cache = [1]


def partition_count(j: int) -> int:
    """P(j) from Euler's pentagonal-number recurrence."""
    if j < 0:
        raise DomainError(f"j must be >= 0, got {j}")
    p = _p_cache
    for n in range(len(p), j + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            g2 = g1 + k
            term = p[n - g1] + (p[n - g2] if g2 <= n else 0)
            total += term if k % 2 else -term
            k += 1
        p.append(total)
    return p[j]


def hardy_ramanujan(j: int, precision_bits: int = 128):
    """exp(pi sqrt(2j/3)) / (4 j sqrt(3))."""
    if j < 1:
        raise DomainError(f"j must be >= 1, got {j}")
    precision_bits = check_precision(precision_bits)
    with mp.workprec(precision_bits + GUARD_BITS):
        value = mpmath.exp(mp.pi * mpmath.sqrt(mpmath.mpf(2 * j) / 3)) / (4 * j * mpmath.sqrt(3))
    return round_to(value, precision_bits)
