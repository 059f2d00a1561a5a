"""Compare the exact partition count with its Hardy-Ramanujan estimate on a log-spaced grid."""

import argparse
import csv
import sys
from dataclasses import dataclass

import mpmath
from mpmath import mp

from eseries.partitions import hardy_ramanujan, partition_count


@dataclass(frozen=True)
class GrowthConfig:
    decades: int = 4
    per_decade: int = 3
    precision_bits: int = 128


def grid(cfg):
    points = {round(10 ** (1 + k / cfg.per_decade)) for k in range(cfg.decades * cfg.per_decade + 1)}
    return sorted(points)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--decades", type=int, default=GrowthConfig.decades)
    parser.add_argument("--per-decade", type=int, default=GrowthConfig.per_decade)
    args = parser.parse_args(argv)
    cfg = GrowthConfig(args.decades, args.per_decade)

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["j", "digits_of_P", "ratio", "relative_gap"])
    for j in grid(cfg):
        p = partition_count(j)
        hr = hardy_ramanujan(j, cfg.precision_bits)
        with mp.workprec(cfg.precision_bits):
            ratio = p / hr
        writer.writerow([j, len(str(p)), mpmath.nstr(ratio, 12), mpmath.nstr(abs(ratio - 1), 6)])


if __name__ == "__main__":
    main()
