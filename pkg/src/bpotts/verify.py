"""Invariant suite behind ``bpotts verify``: each check returns a CheckResult, never raises."""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable

from .braid import lattice_z
from .graph import BoundaryGraph, lattice_graph
from .model import ModelParams, make_model
from .partition import brute_force_z, deletion_contraction_z
from .tlb import AlgebraElement, LoopWeights, generator, markov_trace, random_word, word_element


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    seconds: float = 0.0
    counterexample: str | None = None
    notes: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] {self.name}: {self.cases} cases in {self.seconds:.2f}s"
        if self.counterexample:
            text += f" -- counterexample: {self.counterexample}"
        return text


@dataclass
class VerifyConfig:
    max_rows: int = 3
    max_cols: int = 3
    f_list: tuple[int, ...] = (2, 3)
    B: Fraction = Fraction(-1, 2)
    C: Fraction = Fraction(1, 3)
    gauges: tuple[Fraction, ...] = (Fraction(1), Fraction(2))
    seed: int = 0
    random_graphs: int = 20
    markov_pairs: int = 200
    max_algebra_strands: int = 6
    mutate: str | None = None  # name of a ModelParams field to double in the trace pipeline


def _timed(name: str, fn: Callable[[], tuple[bool, int, str | None]]) -> CheckResult:
    t0 = time.perf_counter()
    passed, cases, cx = fn()
    return CheckResult(name, passed, cases, time.perf_counter() - t0, cx)


def _trace_model(m: ModelParams, mutate: str | None) -> ModelParams:
    if mutate is None:
        return m
    return replace(m, **{mutate: getattr(m, mutate) * 2})


def lattice_cases(cfg: VerifyConfig):
    """Lattices in increasing size so the first failure is a minimal one."""
    dims = sorted(
        itertools.product(range(1, cfg.max_rows + 1), range(1, cfg.max_cols + 1)),
        key=lambda rc: (rc[0] * rc[1], rc),
    )
    for (n, m_cols), f, gauge in itertools.product(dims, cfg.f_list, cfg.gauges):
        yield n, m_cols, f, gauge


def check_three_way(cfg: VerifyConfig) -> CheckResult:
    def run():
        cases = 0
        reference: dict[tuple[int, int, int], tuple] = {}
        for n, m_cols, f, gauge in lattice_cases(cfg):
            m = make_model(f, cfg.B, cfg.C, gauge)
            key = (n, m_cols, f)
            if key not in reference:
                g = lattice_graph(n, m_cols)
                reference[key] = (brute_force_z(g, m), deletion_contraction_z(g, m))
            bz, dz = reference[key]
            tz = lattice_z(n, m_cols, _trace_model(m, cfg.mutate))
            cases += 1
            if not bz == dz == tz:
                return False, cases, (
                    f"{n}x{m_cols} lattice, f={f}, c_gauge={gauge}: brute={bz} dc={dz} trace={tz}"
                )
        return True, cases, None

    return _timed("three-way agreement", run)


def check_gauge_and_rationality(cfg: VerifyConfig) -> list[CheckResult]:
    values: dict[tuple[int, int, int], list] = {}
    t0 = time.perf_counter()
    for n, m_cols, f, gauge in lattice_cases(cfg):
        m = _trace_model(make_model(f, cfg.B, cfg.C, gauge), cfg.mutate)
        values.setdefault((n, m_cols, f), []).append(lattice_z(n, m_cols, m))
    elapsed = time.perf_counter() - t0
    gauge_bad = [k for k, v in values.items() if any(x != v[0] for x in v)]
    irrational = [
        (k, str(x)) for k, v in sorted(values.items()) for x in v if not x.is_rational()
    ]
    n_cases = sum(len(v) for v in values.values())
    return [
        CheckResult(
            "gauge independence",
            not gauge_bad,
            len(values),
            elapsed,
            f"{gauge_bad[0][0]}x{gauge_bad[0][1]}, f={gauge_bad[0][2]}" if gauge_bad else None,
        ),
        CheckResult(
            "sqrt(f) cancellation",
            not irrational,
            n_cases,
            0.0,
            f"{irrational[0][0]} gave {irrational[0][1]}" if irrational else None,
        ),
    ]


def random_graph(
    rng: random.Random,
    max_vertices: int = 6,
    max_inner: int = 8,
    max_boundary: int = 3,
    wall_fraction: float = 0.25,
) -> BoundaryGraph:
    """Random multigraph with wall; self-loops, parallel and repeated wall bonds allowed."""
    n = rng.randint(1, max_vertices)
    names = [f"v{i}" for i in range(n)]
    walls = [v for v in names if rng.random() < wall_fraction]
    inner = [(rng.choice(names), rng.choice(names)) for _ in range(rng.randint(0, max_inner))]
    boundary = [rng.choice(names) for _ in range(rng.randint(0, max_boundary))]
    return BoundaryGraph.build(names, walls, inner, boundary)


def random_params(rng: random.Random) -> tuple[Fraction, Fraction]:
    B = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    C = Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9))
    return B, C


def check_limits(cfg: VerifyConfig) -> list[CheckResult]:
    rng = random.Random(cfg.seed)
    graphs = [random_graph(rng, max_vertices=8) for _ in range(cfg.random_graphs)]

    def c_one():
        for g in graphs:
            B, _ = random_params(rng)
            f = rng.choice([2, 3])
            m = make_model(f, B, 1)
            stripped = BoundaryGraph(g.vertices, g.wall_vertices, g.inner_bonds, ())
            if deletion_contraction_z(g, m) != brute_force_z(stripped, m):
                return False, len(graphs), f"{g}, f={f}, B={B}"
        return True, len(graphs), None

    def f_one():
        for g in graphs:
            B, C = random_params(rng)
            m = make_model(1, B, C)
            expected = (1 + m.B) ** len(g.inner_bonds)
            if not deletion_contraction_z(g, m) == brute_force_z(g, m) == expected:
                return False, len(graphs), f"{g}, B={B}, C={C}"
        return True, len(graphs), None

    return [_timed("C=1 reduction", c_one), _timed("f=1 closed form", f_one)]


def relation_failures(n: int, w: LoopWeights) -> list[str]:
    """Every defining relation of TB_n that fails, as a readable string."""
    e = [generator(n, i, w) for i in range(n)]
    bad = []
    if n >= 2 and e[1] * e[0] * e[1] != e[1] * w.c_prime:
        bad.append(f"n={n}: e1 e0 e1 != c' e1")
    for i in range(n):
        if i == 0 and e[0] * e[0] != e[0] * w.c:
            bad.append(f"n={n}: e0^2 != c e0")
        if i >= 1 and e[i] * e[i] != e[i] * w.d:
            bad.append(f"n={n}: e{i}^2 != d e{i}")
        for j in range(n):
            if i >= 1 and j >= 1 and abs(i - j) == 1 and e[i] * e[j] * e[i] != e[i]:
                bad.append(f"n={n}: e{i} e{j} e{i} != e{i}")
            if abs(i - j) > 1 and e[i] * e[j] != e[j] * e[i]:
                bad.append(f"n={n}: e{i} e{j} != e{j} e{i}")
    return bad


def random_loop_weights(rng: random.Random, f: int) -> LoopWeights:
    m = make_model(f, Fraction(rng.randint(-5, 5), 7), Fraction(rng.randint(1, 6), 7), Fraction(rng.randint(1, 5), rng.randint(1, 5)))
    return LoopWeights.from_model(m)


def check_relations(cfg: VerifyConfig) -> CheckResult:
    def run():
        rng = random.Random(cfg.seed + 1)
        cases = 0
        for f in (2, 3, 5):
            w = random_loop_weights(rng, f)
            for n in range(1, cfg.max_algebra_strands + 1):
                bad = relation_failures(n, w)
                cases += 1
                if bad:
                    return False, cases, bad[0]
        return True, cases, None

    return _timed("algebra relations", run)


def markov_pair(rng: random.Random, n: int, w: LoopWeights, max_len: int = 6) -> tuple[AlgebraElement, AlgebraElement]:
    a = word_element(n, random_word(rng, n - 1, rng.randrange(max_len + 1)), w)
    b = word_element(n, random_word(rng, n - 1, rng.randrange(max_len + 1)), w)
    # mix in a second term so the check also exercises linearity
    if rng.random() < 0.5:
        a = a + word_element(n, random_word(rng, n - 1, rng.randrange(max_len + 1)), w).scale(rng.randint(-3, 3))
    return a, b


def check_markov(cfg: VerifyConfig) -> CheckResult:
    def run():
        rng = random.Random(cfg.seed + 2)
        weights = [random_loop_weights(rng, f) for f in (2, 3, 5)]
        one = AlgebraElement.unit(1, weights[0])
        e0 = generator(1, 0, weights[0])
        if markov_trace(one) != 1 or markov_trace(e0) != weights[0].c / weights[0].d:
            return False, 0, "tr(1) or tr(e0) anchor"
        for k in range(cfg.markov_pairs):
            w = weights[k % len(weights)]
            n = (2, 3, 4, 5)[k % 4]
            a, b = markov_pair(rng, n, w)
            lhs = markov_trace(a * generator(n, n - 1, w) * b)
            rhs = markov_trace(a * b) / w.d
            if lhs != rhs:
                return False, k + 1, f"n={n}: a={a} b={b}"
        return True, cfg.markov_pairs, None

    return _timed("Markov property", run)


def run_suite(cfg: VerifyConfig) -> list[CheckResult]:
    results = [check_three_way(cfg)]
    results += check_gauge_and_rationality(cfg)
    results += check_limits(cfg)
    results.append(check_relations(cfg))
    results.append(check_markov(cfg))
    return results
