"""Exact coefficients a_j = c_j / e of (1 + 1/x)**x = sum_j c_j x**-j.

With f(z) = (1 + z)**(1/z) = sum_j c_j z**j, logarithmic differentiation gives

    (j + 1) c_{j+1} = sum_{l=0}^{j} c_l d_{j-l},    d_m = (-1)**(m+1) (m+1)/(m+2),

which is linear in the c_l.  Dividing by e yields the same recursion for the
rationals a_j with seed a_0 = 1, so the table is built in exact arithmetic and
e only enters when a coefficient is rendered.

The recursion is evaluated on integers rather than on fractions.  Writing
b_j = j! a_j, the exponential-formula expansion of exp(sum_m d-terms) shows that
the denominator of a_j divides

    B_j = j! * prod_{p prime, p <= j+1} p**floor(j / (p - 1)),

and B_j | B_{j'} for j <= j'.  All numerators are kept over one common scale B_J
(raised block-wise as the table grows) and every division that must be exact is
checked, so a wrong bound fails loudly instead of producing wrong rationals.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field

import gmpy2
from gmpy2 import mpq, mpz
from mpmath import mp

from .errors import TableTooShortError
from .numeric import GUARD_BITS, check_precision, compute_e, rational_to_mpf, round_to

Rational = mpq

__all__ = [
    "CoefficientTable",
    "Rational",
    "RecursionKernel",
    "coefficient_c",
    "coefficient_table",
    "d_weight",
    "denominator_bound",
    "extend_table",
    "initial_table",
]


def d_weight(j: int) -> mpq:
    """Coefficient of z**j in the derivative of log f: (-1)**(j+1) (j+1)/(j+2)."""
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    sign = -1 if j % 2 == 0 else 1
    return mpq(sign * (j + 1), j + 2)


def _primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def denominator_bound(j: int) -> mpz:
    """B_j = j! prod_p p**floor(j/(p-1)); a multiple of the denominator of every a_l, l <= j."""
    bound = gmpy2.fac(j)
    for p in _primes_upto(j + 1):
        bound *= mpz(p) ** (j // (p - 1))
    return bound


# Divisors k = m + 2 of the convolution are grouped in runs of this length; the
# product of a run stays below 2**63 for k up to ~5000, so each run costs one
# single-limb division instead of one per term.
_RUN = 5
# How far ahead (in indices) the common scale is raised at a time.
_SCALE_BLOCK = 200


class RecursionKernel:
    """Append-only integer state of the recursion, shared by the tables it serves.

    Holds n_l = a_l * scale for l < len(self), the running alternating sum
    sum_l (-1)**(j-l+1) n_l, and the run tables used by the inner loop.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._scale_index = 0
        self.scale = mpz(1)
        self._num = [mpz(1)]
        self._alt = mpz(0)
        self._entries = [mpq(1)]
        self._runs: list[tuple[int, mpz, tuple[mpz, ...], mpz]] = []
        self._run_lcm = mpz(1)
        self._run_limit = 1

    def __len__(self) -> int:
        return len(self._entries)

    def entries(self, stop: int) -> tuple[mpq, ...]:
        self.ensure(stop - 1)
        return tuple(self._entries[:stop])

    def _prepare_runs(self, kmax: int) -> None:
        if kmax <= self._run_limit:
            return
        runs = []
        k0 = 2
        lcm = mpz(1)
        while k0 <= kmax:
            ks = range(k0, k0 + _RUN)
            prod = mpz(math.prod(ks))
            # sign (-1)**(m+1) with m = k - 2 is + for odd k
            mults = tuple(prod // k if k % 2 else -(prod // k) for k in ks)
            runs.append((k0, prod, mults))
            lcm = gmpy2.lcm(lcm, prod)
            k0 += _RUN
        self._runs = [(k0, prod, mults, lcm // prod) for k0, prod, mults in runs]
        self._run_lcm = lcm
        self._run_limit = k0 - 1

    def _rescale(self, target: int) -> None:
        new_scale = denominator_bound(target)
        factor, rem = gmpy2.f_divmod(new_scale, self.scale)
        if rem:
            raise ArithmeticError("denominator bound is not monotone")
        self._num = [n * factor for n in self._num]
        self._alt *= factor
        self.scale = new_scale
        self._scale_index = target

    def ensure(self, jmax: int) -> None:
        with self._lock:
            if jmax < len(self._entries):
                return
            self._prepare_runs(jmax + 1)
            fdivmod = gmpy2.f_divmod
            num = self._num
            for j in range(len(num) - 1, jmax):
                if j + 1 > self._scale_index:
                    self._rescale(min(jmax, self._scale_index + _SCALE_BLOCK))
                    num = self._num
                self._alt = -self._alt - num[j]
                kmax = j + 2
                # sum_{k=2}^{j+2} s_k n_{j+2-k} / k, split as integer quotients plus
                # remainders carried over the common multiple of the run products
                quot = mpz(0)
                rem_acc = mpz(0)
                for k0, prod, mults, cofactor in self._runs:
                    if k0 > kmax:
                        break
                    i = j + 2 - k0
                    if k0 + _RUN - 1 <= kmax:  # full run; unrolled for _RUN == 5
                        y = (num[i] * mults[0] + num[i - 1] * mults[1] + num[i - 2] * mults[2]
                             + num[i - 3] * mults[3] + num[i - 4] * mults[4])
                    else:
                        y = mpz(0)
                        for t in range(kmax - k0 + 1):
                            y += num[i - t] * mults[t]
                    q, r = fdivmod(y, prod)
                    quot += q
                    rem_acc += r * cofactor
                frac, r = fdivmod(rem_acc, self._run_lcm)
                if r:
                    raise ArithmeticError(f"non-integral remainder sum at j={j}")
                total = self._alt - quot - frac
                nxt, r = fdivmod(total, j + 1)
                if r:
                    raise ArithmeticError(f"a_{j + 1} is not a multiple of 1/B_{self._scale_index}")
                num.append(nxt)
                self._entries.append(mpq(nxt, self.scale))


_default_kernel = RecursionKernel()


@dataclass(frozen=True)
class CoefficientTable:
    """Immutable prefix a_0..a_J of the coefficient sequence."""

    entries: tuple[mpq, ...]
    _kernel: RecursionKernel | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if not self.entries or self.entries[0] != 1:
            raise ValueError("a coefficient table must start with a_0 = 1")

    @property
    def max_index(self) -> int:
        return len(self.entries) - 1

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, j):
        return self.entries[j]

    def require(self, j: int) -> None:
        if j > self.max_index:
            raise TableTooShortError(f"table reaches j={self.max_index}, index {j} requested")


def initial_table(kernel: RecursionKernel | None = None) -> CoefficientTable:
    return CoefficientTable((mpq(1),), kernel)


def extend_table(table: CoefficientTable, new_max: int) -> CoefficientTable:
    """Return a table reaching ``new_max``; entries already present are kept as-is."""
    if new_max < table.max_index:
        raise ValueError(f"new_max={new_max} is below the table's max_index={table.max_index}")
    if new_max == table.max_index:
        return table
    kernel = table._kernel if table._kernel is not None else _default_kernel
    fresh = kernel.entries(new_max + 1)
    return CoefficientTable(table.entries + fresh[len(table.entries):], kernel)


def coefficient_table(jmax: int, *, fresh: bool = False) -> CoefficientTable:
    """Table a_0..a_jmax, served from the process-wide cache unless ``fresh``."""
    kernel = RecursionKernel() if fresh else _default_kernel
    return CoefficientTable(kernel.entries(jmax + 1), kernel)


def coefficient_c(table: CoefficientTable, j: int, precision_bits: int):
    """c_j = e * a_j, rounded once to ``precision_bits``."""
    precision_bits = check_precision(precision_bits)
    table.require(j)
    work = precision_bits + GUARD_BITS
    e = compute_e(work)
    a = rational_to_mpf(table.entries[j], work)
    with mp.workprec(work):
        product = e * a
    return round_to(product, precision_bits)
