"""Timing sweep of brute force, deletion-contraction and the trace formula.

Writes a CSV (one row per lattice, method and repeat) and prints, for every
lattice where both ran, the median trace/brute wall-time ratio.
"""

import argparse
import csv
import statistics
import sys
from fractions import Fraction

from bpotts.cli import BENCH_FIELDS, bench_agreement, bench_rows
from bpotts.coefficients import parse_rational


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-rows", type=int, default=4)
    ap.add_argument("--max-cols", type=int, default=4)
    ap.add_argument("--f", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--B", type=parse_rational, default=Fraction(-1, 2))
    ap.add_argument("--C", type=parse_rational, default=Fraction(1, 3))
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--out", default="bench.csv")
    args = ap.parse_args()

    rows = []
    for f in args.f:
        for rep in range(args.repeats):
            rows += [{**r, "repeat": rep} for r in bench_rows(args.max_rows, args.max_cols, f, args.B, args.C)]
    with open(args.out, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=BENCH_FIELDS + ["repeat"])
        writer.writeheader()
        writer.writerows(rows)

    times: dict = {}
    for r in rows:
        if not isinstance(r["seconds"], str):
            times.setdefault((r["f"], r["rows"], r["cols"], r["method"]), []).append(r["seconds"])
    print("f  lattice  trace/brute")
    for f, n, m, method in sorted(times):
        if method == "trace" and (f, n, m, "brute") in times:
            ratio = statistics.median(times[(f, n, m, "trace")]) / statistics.median(times[(f, n, m, "brute")])
            print(f"{f}  {n}x{m:<6} {ratio:8.2f}")
    ok = bench_agreement(rows)
    print(f"values {'agree' if ok else 'DISAGREE'}; table in {args.out}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
