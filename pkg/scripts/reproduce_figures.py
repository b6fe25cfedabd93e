#!/usr/bin/env python3
"""Regenerate the bound-comparison and timing figures.

Writes four CSVs plus matching gnuplot scripts into --outdir and, when
gnuplot is installed, renders them to PNG. Everything goes through the
legfam CLI so the files are exactly what a user would get by hand:

  1. both bounds against p at fixed k = 1
  2. both bounds against p at fixed k = 10
  3. both bounds against k at a fixed 8-digit prime
  4. median evaluation-time difference against k at the crossover prime
"""

from __future__ import annotations

import argparse
import pathlib
import shutil
import subprocess
import sys

from legfam.cli import main as legfam_main


def run(argv: list[str]) -> None:
    print("legfam " + " ".join(argv))
    code = legfam_main(argv)
    if code != 0:
        sys.exit(f"legfam exited with status {code}")


def render(outdir: pathlib.Path) -> None:
    gnuplot = shutil.which("gnuplot")
    if gnuplot is None:
        print("gnuplot not found; run it on the .gp scripts to get plots")
        return
    for script in sorted(outdir.glob("*.gp")):
        png = script.with_suffix(".png")
        header = f"set terminal pngcairo size 900,600\nset output '{png}'\n"
        subprocess.run(
            [gnuplot, "-e", header, str(script)],
            check=True,
        )
        print(f"wrote {png}")


def parse_args() -> argparse.Namespace:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--outdir", default="figures", help="output directory")
    ap.add_argument("--p-max", type=int, default=8000, help="prime range for 1-2")
    ap.add_argument(
        "--fixed-p", type=int, default=10000019, help="fixed prime for figure 3"
    )
    ap.add_argument(
        "--bench-p", type=int, default=2128240847, help="fixed prime for figure 4"
    )
    ap.add_argument("--k-max", type=int, default=50, help="degree range for 3-4")
    ap.add_argument("--reps", type=int, default=5, help="timing repetitions (odd)")
    return ap.parse_args()


def main() -> None:
    args = parse_args()
    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    run(["scan", "--k", "1", "--p-max", str(args.p_max),
         "--out", str(outdir / "bounds_vs_p_k1.csv"), "--gnuplot"])
    run(["scan", "--k", "10", "--p-max", str(args.p_max),
         "--out", str(outdir / "bounds_vs_p_k10.csv"), "--gnuplot"])
    run(["scan", "--p", str(args.fixed_p), "--k-min", "1", "--k-max", str(args.k_max),
         "--out", str(outdir / "bounds_vs_k.csv"), "--gnuplot"])
    run(["bench", "--p", str(args.bench_p), "--k-min", "1", "--k-max", str(args.k_max),
         "--reps", str(args.reps),
         "--out", str(outdir / "times_vs_k.csv"), "--gnuplot"])

    render(outdir)


if __name__ == "__main__":
    main()
