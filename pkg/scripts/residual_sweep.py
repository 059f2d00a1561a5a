"""Tabulate the scaled remainder |eta_j| j^2 / ln j over a range of j and write it as CSV."""

import argparse
import csv
import sys
from dataclasses import dataclass

import mpmath

from eseries import coefficient_table
from eseries.asymptotics import residual_sweep, sweep_summary


@dataclass(frozen=True)
class SweepConfig:
    j_min: int = 10
    j_max: int = 2000
    precision_bits: int = 128
    stride: int = 1


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--j-min", type=int, default=SweepConfig.j_min)
    parser.add_argument("--j-max", type=int, default=SweepConfig.j_max)
    parser.add_argument("--precision-bits", type=int, default=SweepConfig.precision_bits)
    parser.add_argument("--stride", type=int, default=SweepConfig.stride)
    args = parser.parse_args(argv)
    cfg = SweepConfig(args.j_min, args.j_max, args.precision_bits, args.stride)

    table = coefficient_table(cfg.j_max)
    records = residual_sweep(cfg.j_min, cfg.j_max, cfg.precision_bits, table)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["j", "eta", "scaled"])
    for r in records[:: cfg.stride]:
        writer.writerow([r.j, mpmath.nstr(r.eta, 12), mpmath.nstr(r.scaled, 8)])
    peak, median = sweep_summary(records)
    print(f"# max scaled {mpmath.nstr(peak, 6)}, median {mpmath.nstr(median, 6)}", file=sys.stderr)


if __name__ == "__main__":
    main()
