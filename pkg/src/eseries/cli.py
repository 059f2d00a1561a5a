"""Command-line front end: ``eseries [--format csv|json|plain] <subcommand> ...``.

Data goes to stdout, diagnostics to stderr.  Exit status is 0 on success, 1 when
a verification fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import mpmath
from mpmath import mp

from . import asymptotics, partitions, quadrature, series
from .errors import CostLimitError, NonConvergenceError, PrecisionError, PrefixBoundError
from .exact import coefficient_c, coefficient_table
from .numeric import GUARD_BITS, compute_e, decimal_digits, format_sci, rational_to_mpf, to_mpf

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(fmt: str, header: list[str], rows: list[list], out) -> None:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(["" if v is None else v for v in row] for row in rows)
        out.write(buf.getvalue())
    elif fmt == "json":
        out.write(json.dumps([dict(zip(header, row)) for row in rows], indent=1) + "\n")
    else:
        widths = [max(len(h), *(len("-" if v is None else str(v)) for v in col)) if rows else len(h)
                  for h, col in zip(header, zip(*rows) if rows else [[]] * len(header))]
        out.write("  ".join(h.rjust(w) for h, w in zip(header, widths)) + "\n")
        for row in rows:
            out.write("  ".join(("-" if v is None else str(v)).rjust(w) for v, w in zip(row, widths)) + "\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _precision(text: str) -> int:
    value = int(text)
    if value < 64:
        raise argparse.ArgumentTypeError(f"precision must be >= 64 bits, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eseries", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("csv", "json", "plain"), default="csv")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("coeffs", help="exact table a_j and rendered c_j = e a_j")
    p.add_argument("--jmax", type=_positive_int, required=True)
    p.add_argument("--precision-bits", type=_precision, default=128)

    p = sub.add_parser("verify", help="recursion against the partition-sum oracle")
    p.add_argument("--jmax", type=_positive_int, required=True)

    p = sub.add_parser("asymptotic", help="remainder eta_j = c_j - (-1)^j (1 + 1/j)")
    p.add_argument("--jmin", type=int, required=True)
    p.add_argument("--jmax", type=int, required=True)
    p.add_argument("--precision-bits", type=_precision, default=128)

    p = sub.add_parser("quad", help="c_j by trapezoid quadrature of the Cauchy integral")
    p.add_argument("--j", type=_positive_int, required=True)
    p.add_argument("--radius", default="0.5")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--nodes", type=int)
    group.add_argument("--tol")
    p.add_argument("--precision-bits", type=_precision, default=256)
    p.add_argument("--max-nodes", type=int, default=quadrature.MAX_NODES)

    p = sub.add_parser("partition", help="P(j) against the Hardy-Ramanujan formula")
    p.add_argument("--jmax", type=_positive_int, required=True)
    p.add_argument("--precision-bits", type=_precision, default=128)

    p = sub.add_parser("e-digits", help="estimate e from the convergent series")
    p.add_argument("--digits", type=int)
    p.add_argument("--x", type=int)
    p.add_argument("--terms", type=_positive_int)
    p.add_argument("--precision-bits", type=_precision)
    p.add_argument("--check", action="store_true")
    return parser


def _cmd_coeffs(args, out) -> int:
    table = coefficient_table(args.jmax)
    digits = decimal_digits(args.precision_bits)
    header = ["j", "numerator", "denominator", "decimal"]
    rows = []
    for j in range(args.jmax + 1):
        a = table[j]
        rows.append([j, str(a.numerator), str(a.denominator),
                     format_sci(coefficient_c(table, j, args.precision_bits), digits)])
    if args.format == "json":
        out.write(json.dumps([{"j": j, "num": n, "den": d} for j, n, d, _ in rows], indent=1) + "\n")
    else:
        _emit(args.format, header, rows, out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    if args.jmax > partitions.ORACLE_MAX_J:
        raise UsageError(f"--jmax {args.jmax} exceeds the partition-oracle ceiling {partitions.ORACLE_MAX_J}")
    table = coefficient_table(args.jmax)
    rows, failed = [], 0
    for j in range(args.jmax + 1):
        oracle = partitions.a_via_partitions(j)
        ok = table[j] == oracle
        failed += not ok
        rows.append([j, str(table[j]), f"{oracle.numerator}/{oracle.denominator}", "yes" if ok else "no"])
    _emit(args.format, ["j", "recursion", "oracle", "match"], rows, out)
    if failed:
        print(f"verify: {failed} mismatches for j <= {args.jmax}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _cmd_asymptotic(args, out) -> int:
    if not 1 <= args.jmin <= args.jmax:
        raise UsageError(f"need 1 <= --jmin <= --jmax, got {args.jmin}, {args.jmax}")
    table = coefficient_table(args.jmax)
    digits = decimal_digits(args.precision_bits)
    rows = []
    for j in range(args.jmin, args.jmax + 1):
        rec = asymptotics.eta(j, args.precision_bits, table)
        lead = rational_to_mpf(asymptotics.leading_estimate(j), args.precision_bits)
        rows.append([j, format_sci(rec.c, digits), format_sci(lead, digits), format_sci(rec.eta, digits),
                     None if rec.scaled is None else format_sci(rec.scaled, digits)])
    _emit(args.format, ["j", "c_j", "leading", "eta", "scaled"], rows, out)
    return EXIT_OK


def _cmd_quad(args, out) -> int:
    p = args.precision_bits
    try:
        radius = to_mpf(args.radius, p + GUARD_BITS)
    except ValueError as exc:
        raise UsageError(f"bad --radius {args.radius!r}") from exc
    if not 0 < radius < 1:
        raise UsageError(f"--radius must lie in (0, 1), got {args.radius}")
    try:
        if args.nodes is not None:
            if args.nodes < 4 or args.nodes % 2:
                raise UsageError(f"--nodes must be an even integer >= 4, got {args.nodes}")
            nodes = args.nodes
            estimate = quadrature.cauchy_coefficient(args.j, quadrature.ContourSpec(radius, nodes, p))
        else:
            try:
                tol = to_mpf(args.tol, p)
            except ValueError as exc:
                raise UsageError(f"bad --tol {args.tol!r}") from exc
            if not tol >= 0:
                raise UsageError(f"--tol must be nonnegative, got {args.tol}")
            estimate, nodes = quadrature.adaptive_cauchy(args.j, radius, tol, p, args.max_nodes)
    except PrecisionError as exc:
        raise UsageError(str(exc)) from exc
    except NonConvergenceError as exc:
        print(f"quad: {exc}", file=sys.stderr)
        return EXIT_FAIL
    exact = coefficient_c(coefficient_table(args.j), args.j, p)
    with mp.workprec(p):
        err = abs(estimate - exact)
    digits = decimal_digits(p)
    rows = [[args.j, format_sci(estimate, digits), format_sci(exact, digits), format_sci(err, 6), nodes]]
    _emit(args.format, ["j", "estimate", "exact", "abs_error", "N"], rows, out)
    return EXIT_OK


def _cmd_partition(args, out) -> int:
    p = args.precision_bits
    digits = decimal_digits(p)
    rows = []
    for j in range(1, args.jmax + 1):
        exact = partitions.partition_count(j)
        hr = partitions.hardy_ramanujan(j, p)
        with mp.workprec(p):
            ratio = mpmath.mpf(exact) / hr
        rows.append([j, str(exact), format_sci(hr, digits), format_sci(ratio, digits)])
    _emit(args.format, ["j", "P_exact", "HR_approx", "ratio"], rows, out)
    return EXIT_OK


def _cmd_e_digits(args, out) -> int:
    if args.digits is None and (args.x is None or args.terms is None):
        raise UsageError("e-digits needs --digits, or both --x and --terms")
    if args.x is not None and (args.x < 2 or args.x & (args.x - 1)):
        raise UsageError(f"--x must be a power of two >= 2, got {args.x}")
    if args.digits is not None:
        if args.digits < 1:
            raise UsageError(f"--digits must be >= 1, got {args.digits}")
        m = 16 if args.x is None else args.x.bit_length() - 1
        x, J, p = series.plan_e_digits(args.digits, m)
    else:
        x, J = args.x, args.terms
        p = max(64, (J + 1) * (x.bit_length() - 1) + 64)
    if args.terms is not None:
        J = args.terms
    if args.precision_bits is not None:
        p = args.precision_bits
    try:
        est = series.estimate_e(x, J, p)
    except PrefixBoundError as exc:
        print(f"e-digits: {exc}", file=sys.stderr)
        return EXIT_FAIL
    digits = decimal_digits(p)
    header = ["x", "terms", "value", "claimed_digits", "tail_bound", "bound_kind"]
    row = [x, J, format_sci(est.value, digits), est.claimed_digits, format_sci(est.tail_bound, 6), est.bound_kind]
    status = EXIT_OK
    if args.check:
        e = compute_e(p)
        with mp.workprec(p):
            err = abs(est.value - e)
        ok = err <= est.tail_bound
        header += ["oracle_error", "within_bound"]
        row += [format_sci(err, 6), "yes" if ok else "no"]
        status = EXIT_OK if ok else EXIT_FAIL
    _emit(args.format, header, [row], out)
    return status


_COMMANDS = {
    "coeffs": _cmd_coeffs,
    "verify": _cmd_verify,
    "asymptotic": _cmd_asymptotic,
    "quad": _cmd_quad,
    "partition": _cmd_partition,
    "e-digits": _cmd_e_digits,
}


def run(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        buf = io.StringIO()
        status = _COMMANDS[args.command](args, buf)
    except UsageError as exc:
        print(f"eseries: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CostLimitError as exc:
        print(f"eseries: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.write(buf.getvalue())
    return status


def main() -> None:
    sys.exit(run())
