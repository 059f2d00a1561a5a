"""Recover digits of e from (1 + 1/x)^x corrected by the first J series terms.

For each J the correction is compared against a factorial-series value of e,
showing roughly log10(x) extra digits per added term.
"""

import argparse
import csv
import sys
from dataclasses import dataclass

import mpmath
from mpmath import mp

from eseries.numeric import compute_e
from eseries.series import estimate_e


@dataclass(frozen=True)
class DigitsConfig:
    x: int = 2**16
    max_terms: int = 24
    precision_bits: int = 512


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--x", type=int, default=DigitsConfig.x, help="a power of two above 1")
    parser.add_argument("--max-terms", type=int, default=DigitsConfig.max_terms)
    parser.add_argument("--precision-bits", type=int, default=DigitsConfig.precision_bits)
    args = parser.parse_args(argv)
    cfg = DigitsConfig(args.x, args.max_terms, args.precision_bits)

    oracle = compute_e(cfg.precision_bits)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["terms", "abs_error", "tail_bound", "correct_digits", "claimed_digits"])
    for J in range(cfg.max_terms + 1):
        est = estimate_e(cfg.x, J, cfg.precision_bits)
        with mp.workprec(cfg.precision_bits):
            err = abs(est.value - oracle)
            correct = int(mpmath.floor(-mpmath.log10(err))) if err else cfg.precision_bits
        writer.writerow([J, mpmath.nstr(err, 4), mpmath.nstr(est.tail_bound, 4), correct, est.claimed_digits])


if __name__ == "__main__":
    main()
