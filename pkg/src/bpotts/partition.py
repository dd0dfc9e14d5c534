"""Reference evaluations of the boundary Potts partition function.

``brute_force_z`` sums the Boltzmann weight over every spin state;
``deletion_contraction_z`` applies the bond recursions

    Z(G) = Z(G - e) + B Z(G / e)          for an inner bond e,
    Z(G) = C Z(G - w) + D Z(G / w)        for a wall bond w,

together with the isolated-vertex rules (factor f for a free vertex, 1 for a
wall vertex).
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator

import numpy as np

from .coefficients import QfScalar
from .graph import (
    BoundaryGraph,
    contract_boundary,
    contract_inner,
    delete_boundary,
    delete_inner,
    strip_isolated,
)
from .model import ModelParams

DEFAULT_STATE_BUDGET = 2_000_000
_CHUNK = 1 << 16


class BudgetExceeded(RuntimeError):
    pass


def iter_states(g: BoundaryGraph, f: int) -> Iterator[dict[str, int]]:
    free = sorted(g.free_vertices)
    walls = {v: 0 for v in g.wall_vertices}
    for spins in itertools.product(range(f), repeat=len(free)):
        s = dict(zip(free, spins))
        s.update(walls)
        yield s


def state_weight(g: BoundaryGraph, m: ModelParams, s: dict[str, int]) -> QfScalar:
    missing = g.vertices - s.keys()
    if missing:
        raise KeyError(f"state has no spin for {sorted(missing)}")
    bad = [v for v in g.wall_vertices if s[v] != 0]
    if bad:
        raise ValueError(f"wall vertices {sorted(bad)} must be in state 0")
    w = m.one()
    for u, v in g.inner_bonds:
        if s[u] == s[v]:
            w = w * (1 + m.B)
    for v in g.boundary_bonds:
        w = w * (m.C + m.D) if s[v] == 0 else w * m.C
    return w


def _histogram(job: tuple) -> np.ndarray:
    """Count states in [lo, hi) by (#equal inner bonds, #wall bonds at spin 0)."""
    f, n_free, columns, inner, boundary, lo, hi = job
    nb = len(boundary)
    counts = np.zeros((len(inner) + 1) * (nb + 1), dtype=np.int64)
    for start in range(lo, hi, _CHUNK):
        idx = np.arange(start, min(hi, start + _CHUNK), dtype=np.int64)
        spins = np.zeros((len(idx), n_free + 1), dtype=np.int64)
        # last column stays 0 and stands in for every wall vertex
        for j in range(n_free):
            spins[:, j] = idx % f
            idx = idx // f
        n_eq = np.zeros(len(spins), dtype=np.int64)
        for a, b in inner:
            n_eq += spins[:, columns[a]] == spins[:, columns[b]]
        n_zero = np.zeros(len(spins), dtype=np.int64)
        for v in boundary:
            n_zero += spins[:, columns[v]] == 0
        counts += np.bincount(n_eq * (nb + 1) + n_zero, minlength=len(counts))
    return counts


def state_histogram(
    g: BoundaryGraph, f: int, workers: int = 1, budget: int | None = DEFAULT_STATE_BUDGET
) -> np.ndarray:
    """Integer table ``H[k, j]``: states with k equal-spin inner bonds and j wall bonds at spin 0."""
    free = sorted(g.free_vertices)
    total = f ** len(free)
    if budget is not None and total > budget:
        raise BudgetExceeded(f"{total} states exceed the enumeration budget of {budget}")
    columns = {v: i for i, v in enumerate(free)}
    columns.update({v: len(free) for v in g.wall_vertices})
    base = (f, len(free), columns, g.inner_bonds, g.boundary_bonds)
    workers = max(1, min(workers, total))
    bounds = [total * k // workers for k in range(workers + 1)]
    jobs = [base + (bounds[k], bounds[k + 1]) for k in range(workers)]
    if workers == 1:
        parts = [_histogram(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_histogram, jobs))
    counts = sum(parts[1:], parts[0])
    return counts.reshape(len(g.inner_bonds) + 1, len(g.boundary_bonds) + 1)


def brute_force_z(
    g: BoundaryGraph,
    m: ModelParams,
    workers: int = 1,
    budget: int | None = DEFAULT_STATE_BUDGET,
) -> QfScalar:
    """Sum of state weights over all ``f**|V \\ V0|`` spin states."""
    hist = state_histogram(g, m.f, workers=workers, budget=budget)
    nb = len(g.boundary_bonds)
    inner_w = 1 + m.B
    wall_w = m.C + m.D
    z = QfScalar(0, 0, m.f)
    for k, j in zip(*np.nonzero(hist)):
        k, j = int(k), int(j)
        z = z + int(hist[k, j]) * inner_w**k * wall_w**j * m.C ** (nb - j)
    return z


def naive_sum_z(g: BoundaryGraph, m: ModelParams) -> QfScalar:
    """State-by-state sum of ``state_weight``; slow, used as a cross-check."""
    z = QfScalar(0, 0, m.f)
    for s in iter_states(g, m.f):
        z = z + state_weight(g, m, s)
    return z


BondChoice = tuple[str, object]


def default_choice(g: BoundaryGraph) -> BondChoice:
    """Wall bonds first, then the inner bond at the lowest vertex id."""
    if g.boundary_bonds:
        return "boundary", g.boundary_bonds[0]
    return "inner", g.inner_bonds[0]


def _reduce(g: BoundaryGraph, m: ModelParams) -> tuple[BoundaryGraph, QfScalar]:
    """Apply the factor-only rules until none fires."""
    factor = m.one()
    while True:
        g, n_free, _ = strip_isolated(g)
        if n_free:
            factor = factor * m.f**n_free
        loops = [b for b in g.inner_bonds if b[0] == b[1]]
        pinned = [v for v in g.boundary_bonds if v in g.wall_vertices]
        if not loops and not pinned:
            return g, factor
        if loops:
            factor = factor * (1 + m.B) ** len(loops)
        if pinned:
            factor = factor * (m.C + m.D) ** len(pinned)
        g = BoundaryGraph(
            g.vertices,
            g.wall_vertices,
            tuple(b for b in g.inner_bonds if b[0] != b[1]),
            tuple(v for v in g.boundary_bonds if v not in g.wall_vertices),
        )


def deletion_contraction_z(
    g: BoundaryGraph,
    m: ModelParams,
    choose: Callable[[BoundaryGraph], BondChoice] = default_choice,
    memoize: bool = False,
) -> QfScalar:
    cache: dict[BoundaryGraph, QfScalar] | None = {} if memoize else None

    def z(h: BoundaryGraph) -> QfScalar:
        if cache is not None and h in cache:
            return cache[h]
        h_red, factor = _reduce(h, m)
        if not h_red.n_bonds():
            # only bonded vertices survive _reduce, so h_red is empty here
            result = factor
        else:
            kind, bond = choose(h_red)
            if kind == "boundary":
                result = factor * (
                    m.C * z(delete_boundary(h_red, bond)) + m.D * z(contract_boundary(h_red, bond))
                )
            else:
                result = factor * (z(delete_inner(h_red, bond)) + m.B * z(contract_inner(h_red, bond)))
        if cache is not None:
            cache[h] = result
        return result

    return z(g)
