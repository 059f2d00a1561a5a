"""Taylor coefficients of f(z) = (1 + z)**(1/z) from the Cauchy integral on |z| = r.

The N-point trapezoid rule on the circle returns

    (1 / (N r**j)) sum_k f(r w_k) w_k**-j = c_j + c_{j+N} r**N + c_{j+2N} r**(2N) + ...,

w_k = exp(2 pi i k / N), so for N > j the error decays like r**N: geometric
convergence limited by the branch point at z = -1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath
from mpmath import mp

from .errors import BranchCutError, NonConvergenceError, PrecisionError
from .numeric import GUARD_BITS, check_precision, round_to, to_mpc, to_mpf

SMALL_Z_EXPONENT = -10  # |z| < 2**-10 takes the series path for log(1+z)/z
MAX_NODES = 2**20
START_NODES = 32


def _log1p_over_z(z, precision_bits: int):
    # sum_{s>=0} (-1)**s z**s / (s + 1), stopped once a term drops below 2**-(p+16)
    eps = mpmath.ldexp(1, -precision_bits - 16)
    total = mpmath.mpc(0)
    power = mpmath.mpc(1)
    s = 0
    while True:
        term = power / (s + 1)
        if abs(term) < eps:
            return total
        total += term if s % 2 == 0 else -term
        power *= z
        s += 1


def _on_cut(z) -> bool:
    return z.imag == 0 and z.real <= -1


def f_eval(z, precision_bits: int):
    """(1 + z)**(1/z) on the principal branch, with the removable value f(0) = e."""
    precision_bits = check_precision(precision_bits)
    work = precision_bits + GUARD_BITS
    zv = to_mpc(z, work)
    if _on_cut(zv):
        raise BranchCutError(f"z = {z} lies on the cut (-inf, -1]")
    with mp.workprec(work):
        if abs(zv) < mpmath.ldexp(1, SMALL_Z_EXPONENT):
            w = _log1p_over_z(zv, work)
        else:
            w = mpmath.log(1 + zv) / zv
        value = mpmath.exp(w)
    return round_to(value, precision_bits)


@dataclass(frozen=True)
class ContourSpec:
    """Circle |z| = radius sampled at ``nodes`` equispaced points."""

    radius: mpmath.mpf
    nodes: int
    precision_bits: int

    def __post_init__(self):
        check_precision(self.precision_bits)
        r = to_mpf(self.radius, self.precision_bits + GUARD_BITS)
        if not 0 < r < 1:
            raise ValueError(f"radius must lie in (0, 1), got {self.radius}")
        if self.nodes < 4 or self.nodes % 2:
            raise ValueError(f"nodes must be an even integer >= 4, got {self.nodes}")
        object.__setattr__(self, "radius", r)

    def required_bits(self, j: int) -> float:
        return j * math.log2(1 / float(self.radius)) + 64


@lru_cache(maxsize=32)
def _node_values(radius, nodes: int, work: int):
    with mp.workprec(work):
        roots = [mpmath.expjpi(mpmath.mpf(2 * k) / nodes) for k in range(nodes)]
        values = [f_eval(radius * w, work) for w in roots]
    return tuple(roots), tuple(values)


def cauchy_sum(j: int, spec: ContourSpec):
    """Normalized trapezoid sum; its real part is c_j and its imaginary part should vanish."""
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    if spec.precision_bits < spec.required_bits(j):
        raise PrecisionError(
            f"precision_bits={spec.precision_bits} < j*log2(1/r) + 64 = {spec.required_bits(j):.1f}")
    work = spec.precision_bits + GUARD_BITS
    roots, values = _node_values(spec.radius, spec.nodes, work)
    n = spec.nodes
    with mp.workprec(work):
        acc = mpmath.mpc(0)
        for k in range(n):
            acc += values[k] * mpmath.conj(roots[(j * k) % n])
        result = acc / (n * spec.radius**j)
    return round_to(result, spec.precision_bits)


def cauchy_coefficient(j: int, spec: ContourSpec):
    """Trapezoid approximation of c_j = (1/2 pi i) oint f(z) z**-(j+1) dz on |z| = r."""
    return cauchy_sum(j, spec).real


def adaptive_cauchy(j: int, r, tol, precision_bits: int, max_nodes: int = MAX_NODES):
    """Double N from 32 until successive estimates differ by less than ``tol``.

    Returns ``(estimate, N)``.  Raises :class:`NonConvergenceError`, carrying the
    last two differences, once N would exceed ``max_nodes``.
    """
    if not tol >= 0:
        raise ValueError(f"tol must be nonnegative, got {tol}")
    nodes = START_NODES
    prev = cauchy_coefficient(j, ContourSpec(r, nodes, precision_bits))
    deltas: list = []
    work = precision_bits + GUARD_BITS
    tol_v = to_mpf(tol, work)
    while True:
        nodes *= 2
        if nodes > max_nodes:
            raise NonConvergenceError(
                f"no convergence to tol={mpmath.nstr(tol_v, 5)} with N <= {max_nodes}; "
                f"last deltas {[mpmath.nstr(d, 5) for d in deltas[-2:]]}",
                deltas[-2:])
        cur = cauchy_coefficient(j, ContourSpec(r, nodes, precision_bits))
        with mp.workprec(work):
            delta = abs(cur - prev)
        deltas.append(delta)
        if delta < tol_v:
            return cur, nodes
        prev = cur
