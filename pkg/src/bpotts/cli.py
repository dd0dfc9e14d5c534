"""Command line front end: ``lattice``, ``graph``, ``verify`` and ``bench``.

Exit codes: 0 success, 1 verification failure or method disagreement,
2 usage/parameter error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
import time
from dataclasses import replace
from fractions import Fraction
from typing import Callable

from .braid import DEFAULT_MAX_STRANDS, lattice_z
from .coefficients import QfScalar, parse_rational
from .graph import BoundaryGraph, GraphError, lattice_graph, load_graph
from .model import ParameterError, PhysicalParams, make_model, physical_to_model
from .partition import DEFAULT_STATE_BUDGET, BudgetExceeded, brute_force_z, deletion_contraction_z
from .verify import VerifyConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(report: dict, out=None) -> None:
    json.dump(report, out or sys.stdout, sort_keys=True, indent=2)
    (out or sys.stdout).write("\n")


def _value_fields(z: QfScalar) -> dict:
    return {"value": str(z), "float": float(z)}


def _add_model_flags(p: argparse.ArgumentParser, physical: bool = False) -> None:
    p.add_argument("--f", type=int, required=True, help="states per spin")
    p.add_argument("--B", type=_rational, help="inner bond weight p/q (= exp(-1/kT) - 1)")
    p.add_argument("--C", type=_rational, help="wall bond weight p/q (= exp(-kappa/kT))")
    p.add_argument("--c-gauge", type=_rational, default=Fraction(1), help="c = c_gauge * sqrt(f)")
    if physical:
        p.add_argument("--kT", type=float, help="temperature (float path; overrides --B)")
        p.add_argument("--kappa", type=float, help="wall coupling (float path; overrides --C)")
    p.add_argument("--mutate", default=None, help=argparse.SUPPRESS)


def _model_from_args(args) -> tuple:
    physical = None
    B, C = args.B, args.C
    if getattr(args, "kT", None) is not None:
        fw = physical_to_model(PhysicalParams(args.kT, args.kappa or 0.0), args.f)
        # binary floats are rationals; the exact pipeline runs on their exact values
        B, C = Fraction(fw.B), Fraction(fw.C)
        physical = {"kT": args.kT, "kappa": args.kappa or 0.0, "B_float": fw.B, "C_float": fw.C}
    if B is None or C is None:
        raise ParameterError("--B and --C are required unless --kT is given")
    return make_model(args.f, B, C, args.c_gauge), physical


def _timed(fn: Callable[[], QfScalar]) -> tuple[QfScalar, float]:
    t0 = time.perf_counter()
    z = fn()
    return z, time.perf_counter() - t0


def _mutated(m, name):
    return m if name is None else replace(m, **{name: getattr(m, name) * 2})


def cmd_lattice(args) -> int:
    m, physical = _model_from_args(args)
    g = lattice_graph(args.rows, args.cols)
    methods = {
        "brute": lambda: brute_force_z(g, m, workers=args.workers, budget=args.state_budget),
        "dc": lambda: deletion_contraction_z(g, m),
        "trace": lambda: lattice_z(args.rows, args.cols, _mutated(m, args.mutate), args.max_strands),
    }
    chosen = list(methods) if args.method == "all" else [args.method]
    results = []
    for name in chosen:
        z, secs = _timed(methods[name])
        results.append({"method": name, "seconds": secs, **_value_fields(z)})
    report = {
        "command": "lattice",
        "rows": args.rows,
        "cols": args.cols,
        "f": m.f,
        "B": str(m.B),
        "C": str(m.C),
        "c_gauge": str(args.c_gauge),
        "results": results,
    }
    if physical:
        report["physical"] = physical
    agree = len({r["value"] for r in results}) == 1
    report["agree"] = agree
    _emit(report)
    return EXIT_OK if agree else EXIT_FAIL


def cmd_graph(args) -> int:
    m, _ = _model_from_args(args)
    g = load_graph(args.input)
    methods = {
        "brute": lambda: brute_force_z(g, m, workers=args.workers, budget=args.state_budget),
        "dc": lambda: deletion_contraction_z(g, m, memoize=args.memoize),
    }
    chosen = list(methods) if args.method == "both" else [args.method]
    results = []
    for name in chosen:
        z, secs = _timed(methods[name])
        results.append({"method": name, "seconds": secs, **_value_fields(z)})
    report = {"command": "graph", "graph": g.to_dict(), "f": m.f, "B": str(m.B), "C": str(m.C), "results": results}
    agree = len({r["value"] for r in results}) == 1
    report["agree"] = agree
    if not agree:
        report["diff"] = str(QfScalar.parse(results[0]["value"], m.f) - QfScalar.parse(results[1]["value"], m.f))
    _emit(report)
    return EXIT_OK if agree else EXIT_FAIL


def cmd_verify(args) -> int:
    cfg = VerifyConfig(
        max_rows=args.max_rows,
        max_cols=args.max_cols,
        f_list=args.f_list,
        seed=args.seed,
        mutate=args.mutate,
    )
    t0 = time.perf_counter()
    results = run_suite(cfg)
    for r in results:
        print(r.line())
    ok = all(r.passed for r in results)
    print(f"{'PASS' if ok else 'FAIL'}: {sum(r.passed for r in results)}/{len(results)} checks in {time.perf_counter() - t0:.1f}s")
    return EXIT_OK if ok else EXIT_FAIL


BENCH_FIELDS = ["rows", "cols", "f", "method", "seconds", "value"]


def bench_rows(
    max_rows: int,
    max_cols: int,
    f: int,
    B: Fraction,
    C: Fraction,
    state_budget: int | None = DEFAULT_STATE_BUDGET,
    max_strands: int | None = DEFAULT_MAX_STRANDS,
    max_bonds: int = 16,
) -> list[dict]:
    """Wall-time of each method on every lattice up to the given size."""
    m = make_model(f, B, C)
    rows = []
    for n in range(1, max_rows + 1):
        for k in range(1, max_cols + 1):
            g = lattice_graph(n, k)
            methods = {
                "brute": lambda: brute_force_z(g, m, budget=state_budget),
                "dc": lambda: _dc_guarded(g, m, max_bonds),
                "trace": lambda: lattice_z(n, k, m, max_strands),
            }
            for name, fn in methods.items():
                try:
                    z, secs = _timed(fn)
                    rows.append({"rows": n, "cols": k, "f": f, "method": name, "seconds": secs, "value": str(z)})
                except BudgetExceeded:
                    rows.append({"rows": n, "cols": k, "f": f, "method": name, "seconds": "skipped", "value": "skipped"})
    return rows


def _dc_guarded(g: BoundaryGraph, m, max_bonds: int) -> QfScalar:
    if g.n_bonds() > max_bonds:
        raise BudgetExceeded(f"{g.n_bonds()} bonds exceed the recursion budget of {max_bonds}")
    return deletion_contraction_z(g, m)


def bench_agreement(rows: list[dict]) -> bool:
    by_cell: dict[tuple, set] = {}
    for r in rows:
        if r["value"] != "skipped":
            by_cell.setdefault((r["rows"], r["cols"], r["f"]), set()).add(r["value"])
    return all(len(v) == 1 for v in by_cell.values())


def cmd_bench(args) -> int:
    rows = bench_rows(
        args.max_rows, args.max_cols, args.f, args.B, args.C, args.state_budget, args.max_strands, args.max_bonds
    )
    agree = bench_agreement(rows)
    if args.format == "csv":
        writer = csv.DictWriter(sys.stdout, fieldnames=BENCH_FIELDS, lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({**r, "seconds": r["seconds"] if isinstance(r["seconds"], str) else f"{r['seconds']:.6f}"})
    else:
        _emit({"command": "bench", "rows": rows, "agree": agree})
    return EXIT_OK if agree else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bpotts", description="Boundary Potts partition functions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice", help="rectangular lattice with one wall bond per row")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    _add_model_flags(p, physical=True)
    p.add_argument("--method", choices=["brute", "dc", "trace", "all"], default="all")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--state-budget", type=int, default=DEFAULT_STATE_BUDGET)
    p.add_argument("--max-strands", type=int, default=DEFAULT_MAX_STRANDS)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("graph", help="arbitrary graph with wall from a JSON file")
    p.add_argument("--input", required=True)
    _add_model_flags(p)
    p.add_argument("--method", choices=["brute", "dc", "both"], default="both")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--state-budget", type=int, default=DEFAULT_STATE_BUDGET)
    p.add_argument("--memoize", action="store_true")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--max-rows", type=int, default=3)
    p.add_argument("--max-cols", type=int, default=3)
    p.add_argument("--f-list", type=_int_list, default=(2, 3))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mutate", default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time brute force, deletion-contraction and trace")
    p.add_argument("--max-rows", type=int, default=3)
    p.add_argument("--max-cols", type=int, default=3)
    p.add_argument("--f", type=int, default=2)
    p.add_argument("--B", type=_rational, default=Fraction(-1, 2))
    p.add_argument("--C", type=_rational, default=Fraction(1, 3))
    p.add_argument("--state-budget", type=int, default=DEFAULT_STATE_BUDGET)
    p.add_argument("--max-strands", type=int, default=DEFAULT_MAX_STRANDS)
    p.add_argument("--max-bonds", type=int, default=16)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_bench)
    return parser


def _glue_negative(argv: list[str]) -> list[str]:
    """Rewrite ``--B -1/2`` as ``--B=-1/2``; argparse takes ``-1/2`` for an option."""
    out: list[str] = []
    for tok in argv:
        if out and out[-1].startswith("--") and "=" not in out[-1] and re.fullmatch(r"-\d+(/\d+)?", tok):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_negative(sys.argv[1:] if argv is None else list(argv)))
    mutate = getattr(args, "mutate", None)
    if mutate is not None and mutate not in ("alpha", "beta", "alpha0", "beta0"):
        parser.error(f"--mutate accepts alpha, beta, alpha0 or beta0, not {mutate!r}")
    try:
        return args.func(args)
    except (ParameterError, GraphError, ValueError) as exc:
        problems = getattr(exc, "violations", [str(exc)])
        _emit({"error": type(exc).__name__, "problems": problems}, sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        _emit({"error": "BudgetExceeded", "problems": [str(exc)]}, sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
