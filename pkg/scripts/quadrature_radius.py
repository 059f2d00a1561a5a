"""Recover c_j by trapezoidal Cauchy sums on several radii and report nodes used and error."""

import argparse
import csv
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
from mpmath import mp

from eseries import coefficient_table
from eseries.exact import coefficient_c
from eseries.quadrature import adaptive_cauchy


@dataclass(frozen=True)
class RadiusConfig:
    radii: tuple = field(default=(Fraction(1, 4), Fraction(2, 5), Fraction(1, 2), Fraction(3, 5), Fraction(4, 5)))
    j_values: tuple = (0, 5, 20, 40)
    tol: str = "1e-30"
    precision_bits: int = 384


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--precision-bits", type=int, default=RadiusConfig.precision_bits)
    args = parser.parse_args(argv)
    cfg = RadiusConfig(precision_bits=args.precision_bits)

    table = coefficient_table(max(cfg.j_values))
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["j", "radius", "N", "abs_error"])
    for j in cfg.j_values:
        exact = coefficient_c(table, j, cfg.precision_bits)
        for r in cfg.radii:
            est, nodes = adaptive_cauchy(j, r, mpmath.mpf(cfg.tol), cfg.precision_bits)
            with mp.workprec(cfg.precision_bits):
                err = abs(est - exact)
            writer.writerow([j, str(r), nodes, mpmath.nstr(err, 4)])


if __name__ == "__main__":
    main()
