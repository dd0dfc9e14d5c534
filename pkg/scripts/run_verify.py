"""Run the invariant suite over a configurable lattice range and write a JSON report."""

import argparse
import json
import sys
from dataclasses import asdict

from bpotts.verify import VerifyConfig, run_suite


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-rows", type=int, default=3)
    ap.add_argument("--max-cols", type=int, default=3)
    ap.add_argument("--seeds", type=int, default=3, help="repeat the randomized checks for seeds 0..N-1")
    ap.add_argument("--out", default="verify_report.json")
    args = ap.parse_args()

    runs = []
    for seed in range(args.seeds):
        cfg = VerifyConfig(max_rows=args.max_rows, max_cols=args.max_cols, seed=seed)
        results = run_suite(cfg)
        for r in results:
            print(f"seed {seed} {r.line()}")
        runs.append({"seed": seed, "results": [asdict(r) for r in results]})
    with open(args.out, "w") as fh:
        json.dump(runs, fh, indent=2, sort_keys=True)
    ok = all(r["passed"] for run in runs for r in run["results"])
    print(f"{'PASS' if ok else 'FAIL'}; report in {args.out}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
