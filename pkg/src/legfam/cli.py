"""Command-line front end.

Subcommands: bound (one cell), scan (grid to CSV), bench (timing medians
to CSV), crossover (first prime with a positive older bound), oracle
(exact family complexity), w (Lambert W calculator), verify (invariant
suites), family (dump the +-1 sequences).

Exit codes: 0 success, 1 usage error, 2 domain error, 3 resource budget
exceeded, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from dataclasses import dataclass

from .bounds import (
    crossover_prime,
    gyarmati_bound,
    make_report,
    theorem1_bound,
)
from .checks import SUITES, run_suite
from .errors import BudgetExceededError
from .fcomplexity import DEFAULT_CELL_BUDGET, family_complexity
from .lambertw import ConvergenceError, w0_complex, w0_from_log, w0_real
from .legendre_seq import build_family
from .ntheory import primes_up_to

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_RESOURCE = 3
EXIT_VERIFY = 4

CSV_HEADER = (
    "p,k,new_bound,guaranteed_j,gyarmati_bound,gyarmati_c,upper_bound,"
    "t_new_ns,t_gyarmati_ns"
)


class UsageError(Exception):
    """Bad flag combinations detected after argparse."""


def _fmt(x: float) -> str:
    # CSV/text contract: '.' decimal separator, 15 significant digits
    return f"{x:.15g}"


@dataclass(frozen=True)
class ScanRow:
    """One CSV row of a scan or bench run."""

    p: int
    k: int
    new_bound: float
    guaranteed_j: int
    gyarmati_bound: float
    gyarmati_c: float
    upper_bound: float
    t_new_ns: int
    t_gyarmati_ns: int

    def csv(self) -> str:
        return ",".join(
            (
                str(self.p),
                str(self.k),
                _fmt(self.new_bound),
                str(self.guaranteed_j),
                _fmt(self.gyarmati_bound),
                _fmt(self.gyarmati_c),
                _fmt(self.upper_bound),
                str(self.t_new_ns),
                str(self.t_gyarmati_ns),
            )
        )


def _report_row(p: int, k: int, t_new_ns: int | None = None, t_gy_ns: int | None = None) -> ScanRow:
    rep = make_report(p, k)
    return ScanRow(
        p=rep.p,
        k=rep.k,
        new_bound=rep.new_bound,
        guaranteed_j=rep.guaranteed_j,
        gyarmati_bound=rep.gyarmati_bound,
        gyarmati_c=rep.gyarmati_c,
        upper_bound=rep.upper_bound,
        t_new_ns=rep.eval_time_new_ns if t_new_ns is None else t_new_ns,
        t_gyarmati_ns=rep.eval_time_gyarmati_ns if t_gy_ns is None else t_gy_ns,
    )


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _emit_rows(rows: list[ScanRow], out: str | None) -> None:
    _write_text(out, "\n".join([CSV_HEADER] + [r.csv() for r in rows]) + "\n")


def _gnuplot_script(csv_path: str, ranged: str, kind: str) -> str:
    xcol = 1 if ranged == "p" else 2
    head = f"set datafile separator ','\nset xlabel '{ranged}'\nset key left top\n"
    if kind == "bounds":
        return head + (
            "set ylabel 'lower bound on family complexity'\n"
            f"plot '{csv_path}' every ::1 using {xcol}:3 with lines title 'new bound', \\\n"
            f"     '{csv_path}' every ::1 using {xcol}:5 with lines title 'previous bound', \\\n"
            f"     '{csv_path}' every ::1 using {xcol}:7 with lines title 'log2 family size'\n"
        )
    return head + (
        "set ylabel 'evaluation time difference (s)'\n"
        f"plot '{csv_path}' every ::1 using {xcol}:(($8-$9)/1e9) with lines "
        "title 'new minus previous'\n"
    )


def _grid_cells(args: argparse.Namespace) -> tuple[list[tuple[int, int]], str]:
    """Cells for scan/bench plus which axis is ranged ('p' or 'k').

    Exactly one axis must be ranged; a ranged p visits odd primes only.
    """
    ranged_p = args.p_max is not None
    ranged_k = args.k_max is not None
    if ranged_p == ranged_k:
        raise UsageError("exactly one of --p-max and --k-max must be given")
    if ranged_p:
        if args.k is None:
            raise UsageError("--k is required when ranging over p")
        if args.p is not None:
            raise UsageError("--p conflicts with --p-min/--p-max")
        lo = max(3, args.p_min)
        if args.p_max < lo:
            raise UsageError(f"--p-max must be >= {lo}")
        primes = [q for q in primes_up_to(args.p_max) if q >= lo and q != 2]
        return [(q, args.k) for q in primes], "p"
    if args.p is None:
        raise UsageError("--p is required when ranging over k")
    if args.k is not None:
        raise UsageError("--k conflicts with --k-min/--k-max")
    k_lo = args.k_min if args.k_min is not None else 1
    if k_lo < 1 or args.k_max < k_lo:
        raise UsageError("need 1 <= --k-min <= --k-max")
    return [(args.p, k) for k in range(k_lo, args.k_max + 1)], "k"


def cmd_bound(args: argparse.Namespace) -> int:
    rep = make_report(args.p, args.k)
    if args.format == "csv":
        print(CSV_HEADER)
        print(_report_row(args.p, args.k).csv())
        return EXIT_OK
    fields = {
        "p": rep.p,
        "k": rep.k,
        "a_log2": rep.a_log2.log2_value,
        "b": rep.b,
        "new_bound": rep.new_bound,
        "guaranteed_j": rep.guaranteed_j,
        "gyarmati_bound": rep.gyarmati_bound,
        "gyarmati_c": rep.gyarmati_c,
        "upper_bound": rep.upper_bound,
        "t_new_ns": rep.eval_time_new_ns,
        "t_gyarmati_ns": rep.eval_time_gyarmati_ns,
    }
    if args.format == "json":
        print(json.dumps(fields))
        return EXIT_OK
    for key, value in fields.items():
        print(f"{key} = {_fmt(value) if isinstance(value, float) else value}")
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    cells, ranged = _grid_cells(args)
    rows = [_report_row(p, k) for p, k in cells]
    _emit_rows(rows, args.out)
    if args.gnuplot:
        if args.out is None:
            raise UsageError("--gnuplot needs --out (the script references the CSV)")
        _write_text(args.out + ".gp", _gnuplot_script(args.out, ranged, "bounds"))
    return EXIT_OK


def _median_time_ns(fn, reps: int) -> int:
    times = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        fn()
        times.append(time.perf_counter_ns() - t0)
    return int(statistics.median(times))


def cmd_bench(args: argparse.Namespace) -> int:
    if args.reps < 3 or args.reps % 2 == 0:
        raise UsageError(f"--reps must be an odd number >= 3, got {args.reps}")
    cells, ranged = _grid_cells(args)
    rows = []
    for p, k in cells:
        theorem1_bound(p, k)  # warmup both code paths before timing
        gyarmati_bound(p, k)
        t_new = _median_time_ns(lambda: theorem1_bound(p, k), args.reps)
        t_gy = _median_time_ns(lambda: gyarmati_bound(p, k), args.reps)
        rows.append(_report_row(p, k, t_new_ns=t_new, t_gy_ns=t_gy))
    _emit_rows(rows, args.out)
    if args.gnuplot:
        if args.out is None:
            raise UsageError("--gnuplot needs --out (the script references the CSV)")
        _write_text(args.out + ".gp", _gnuplot_script(args.out, ranged, "times"))
    return EXIT_OK


def cmd_crossover(args: argparse.Namespace) -> int:
    print(crossover_prime(args.k, args.p_limit))
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    family = build_family(args.p, args.k)
    t0 = time.perf_counter_ns()
    res = family_complexity(family, j_cap=args.j_cap, cell_budget=args.budget)
    elapsed = time.perf_counter_ns() - t0
    if args.format == "json":
        print(
            json.dumps(
                {
                    "gamma": res.gamma,
                    "witness_positions": None
                    if res.witness_failure is None
                    else list(res.witness_failure[0]),
                    "witness_signs": None
                    if res.witness_failure is None
                    else list(res.witness_failure[1]),
                    "cells_examined": res.cells_examined,
                    "time_ns": elapsed,
                }
            )
        )
        return EXIT_OK
    print(f"gamma = {res.gamma}")
    if res.witness_failure is None:
        print("witness = none (every level up to the cap is realized)")
    else:
        pos, signs = res.witness_failure
        print(f"witness_positions = {','.join(map(str, pos))}")
        print(f"witness_signs = {','.join(f'{s:+d}' for s in signs)}")
    print(f"cells_examined = {res.cells_examined}")
    print(f"time_ns = {elapsed}")
    return EXIT_OK


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"--complex expects 'RE,IM', got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise UsageError(f"--complex expects two floats, got {text!r}") from exc


def cmd_w(args: argparse.Namespace) -> int:
    if args.x is not None:
        print(_fmt(w0_real(args.x).value))
    elif args.log_x is not None:
        print(_fmt(w0_from_log(args.log_x).value))
    else:
        value = w0_complex(_parse_complex(args.comp)).value
        sign = "+" if value.imag >= 0 else "-"
        print(f"{_fmt(value.real)} {sign} {_fmt(abs(value.imag))}i")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    all_ok = True
    for name in names:
        rep = run_suite(name)
        for failure in rep.failures:
            print(f"FAIL [{rep.name}] {failure}")
        if rep.skipped:
            print(f"... {rep.skipped} further failures suppressed")
        status = "ok" if rep.ok else "FAILED"
        print(f"{rep.name}: {status} ({rep.checked} checks)")
        all_ok = all_ok and rep.ok
    return EXIT_OK if all_ok else EXIT_VERIFY


def cmd_family(args: argparse.Namespace) -> int:
    if not args.dump:
        raise UsageError("family only dumps sequences; pass --dump")
    fam = build_family(args.p, args.k)
    lines = [",".join(str(v) for v in member.values) for member in fam.members]
    _write_text(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for domain errors here
    def error(self, message):  # noqa: A003 - argparse API
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="legfam", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add_grid_flags(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--p", type=int, help="fixed prime (when ranging over k)")
        sp.add_argument("--k", type=int, help="fixed degree (when ranging over p)")
        sp.add_argument("--p-min", type=int, default=3)
        sp.add_argument("--p-max", type=int)
        sp.add_argument("--k-min", type=int)
        sp.add_argument("--k-max", type=int)
        sp.add_argument("--out", help="CSV output path (stdout when omitted)")
        sp.add_argument(
            "--gnuplot",
            action="store_true",
            help="also write a gnuplot script next to the CSV",
        )

    sp = sub.add_parser("bound", help="evaluate both bounds at one (p, k)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--format", choices=("text", "csv", "json"), default="text")
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("scan", help="bound values over a grid, as CSV")
    add_grid_flags(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("bench", help="median evaluation times over a grid, as CSV")
    add_grid_flags(sp)
    sp.add_argument("--reps", type=int, default=5, help="odd repetition count >= 3")
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("crossover", help="first odd prime with a positive older bound")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--p-limit", type=int, default=2 ** 32)
    sp.set_defaults(func=cmd_crossover)

    sp = sub.add_parser("oracle", help="exact family complexity by exhaustive search")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--j-cap", type=int, default=None)
    sp.add_argument("--budget", type=int, default=DEFAULT_CELL_BUDGET)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("w", help="Lambert W calculator (principal branch)")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--x", type=float, help="real argument")
    group.add_argument("--log-x", type=float, help="natural log of the argument")
    group.add_argument("--complex", dest="comp", help="complex argument as 'RE,IM'")
    sp.set_defaults(func=cmd_w)

    sp = sub.add_parser("verify", help="run an invariant suite")
    sp.add_argument(
        "suite", choices=sorted(SUITES) + ["all"], help="which suite to run"
    )
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("family", help="dump the +-1 sequences of a family")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--dump", action="store_true")
    sp.add_argument("--out", help="output path (stdout when omitted)")
    sp.set_defaults(func=cmd_family)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse signals usage problems (and -h) this way
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, ConvergenceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
