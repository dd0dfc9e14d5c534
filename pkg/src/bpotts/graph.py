"""Graphs with a wall: vertices, wall-pinned vertices, inner bonds and wall bonds.

Bonds are multisets (stored as sorted tuples) because contraction creates
parallel bonds, self-loops and repeated wall bonds.  Every edit returns a
new graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable


class GraphError(ValueError):
    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


def _pair(u: str, v: str) -> tuple[str, str]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class BoundaryGraph:
    vertices: frozenset[str] = frozenset()
    wall_vertices: frozenset[str] = frozenset()
    inner_bonds: tuple[tuple[str, str], ...] = ()
    boundary_bonds: tuple[str, ...] = ()

    @classmethod
    def build(
        cls,
        vertices: Iterable[str] = (),
        wall_vertices: Iterable[str] = (),
        inner_bonds: Iterable[tuple[str, str]] = (),
        boundary_bonds: Iterable[str] = (),
        check: bool = True,
    ) -> BoundaryGraph:
        g = cls(
            frozenset(vertices),
            frozenset(wall_vertices),
            tuple(sorted(_pair(u, v) for u, v in inner_bonds)),
            tuple(sorted(boundary_bonds)),
        )
        if check:
            problems = validate(g)
            if problems:
                raise GraphError(problems)
        return g

    @property
    def free_vertices(self) -> frozenset[str]:
        return self.vertices - self.wall_vertices

    def degree(self, v: str) -> int:
        deg = sum((a == v) + (b == v) for a, b in self.inner_bonds)
        return deg + self.boundary_bonds.count(v)

    def n_bonds(self) -> int:
        return len(self.inner_bonds) + len(self.boundary_bonds)

    def to_dict(self) -> dict:
        return {
            "vertices": sorted(self.vertices),
            "wall_vertices": sorted(self.wall_vertices),
            "inner_bonds": [list(b) for b in self.inner_bonds],
            "boundary_bonds": list(self.boundary_bonds),
        }

    def __str__(self) -> str:
        walls = ",".join(sorted(self.wall_vertices)) or "-"
        inner = " ".join(f"{u}-{v}" for u, v in self.inner_bonds) or "-"
        wall_b = ",".join(self.boundary_bonds) or "-"
        return f"V={{{','.join(sorted(self.vertices))}}} V0={{{walls}}} B1=[{inner}] B0=[{wall_b}]"


def validate(g: BoundaryGraph) -> list[str]:
    """Every violated invariant, one message per offending element; empty if ok."""
    problems = []
    for v in sorted(g.wall_vertices - g.vertices):
        problems.append(f"wall vertex {v!r} is not a vertex")
    for u, v in g.inner_bonds:
        for end in (u, v):
            if end not in g.vertices:
                problems.append(f"inner bond {u}-{v} references unknown vertex {end!r}")
    for v in g.boundary_bonds:
        if v not in g.vertices:
            problems.append(f"boundary bond on unknown vertex {v!r}")
    return problems


def graph_from_dict(data: dict) -> BoundaryGraph:
    problems = []
    if not isinstance(data, dict):
        raise GraphError(["graph JSON must be an object"])
    unknown = set(data) - {"vertices", "wall_vertices", "inner_bonds", "boundary_bonds"}
    problems.extend(f"unknown key {k!r}" for k in sorted(unknown))
    bonds = data.get("inner_bonds", [])
    for b in bonds:
        if not (isinstance(b, (list, tuple)) and len(b) == 2):
            problems.append(f"inner bond {b!r} is not a pair")
    if problems:
        raise GraphError(problems)
    return BoundaryGraph.build(
        (str(v) for v in data.get("vertices", [])),
        (str(v) for v in data.get("wall_vertices", [])),
        ((str(u), str(v)) for u, v in bonds),
        (str(v) for v in data.get("boundary_bonds", [])),
    )


def load_graph(path: str) -> BoundaryGraph:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise GraphError([f"malformed JSON: {exc}"]) from exc
    return graph_from_dict(data)


def _remove_one(items: tuple, item) -> tuple:
    i = items.index(item)
    return items[:i] + items[i + 1 :]


def delete_inner(g: BoundaryGraph, bond: tuple[str, str]) -> BoundaryGraph:
    bond = _pair(*bond)
    if bond not in g.inner_bonds:
        raise KeyError(f"no inner bond {bond}")
    return BoundaryGraph(g.vertices, g.wall_vertices, _remove_one(g.inner_bonds, bond), g.boundary_bonds)


def contract_inner(g: BoundaryGraph, bond: tuple[str, str]) -> BoundaryGraph:
    """Merge the endpoints of one occurrence of ``bond``.

    The merged vertex keeps the smaller id and sits on the wall if either
    endpoint did.  Contracting a self-loop just removes it.
    """
    keep, gone = _pair(*bond)
    if (keep, gone) not in g.inner_bonds:
        raise KeyError(f"no inner bond {(keep, gone)}")
    rest = _remove_one(g.inner_bonds, (keep, gone))
    if keep == gone:
        return BoundaryGraph(g.vertices, g.wall_vertices, rest, g.boundary_bonds)

    def ren(v: str) -> str:
        return keep if v == gone else v

    walls = g.wall_vertices
    if gone in walls:
        walls = (walls - {gone}) | {keep}
    return BoundaryGraph(
        g.vertices - {gone},
        walls,
        tuple(sorted(_pair(ren(u), ren(v)) for u, v in rest)),
        tuple(sorted(ren(v) for v in g.boundary_bonds)),
    )


def delete_boundary(g: BoundaryGraph, v: str) -> BoundaryGraph:
    if v not in g.boundary_bonds:
        raise KeyError(f"vertex {v!r} has no boundary bond")
    return BoundaryGraph(g.vertices, g.wall_vertices, g.inner_bonds, _remove_one(g.boundary_bonds, v))


def contract_boundary(g: BoundaryGraph, v: str) -> BoundaryGraph:
    if v not in g.boundary_bonds:
        raise KeyError(f"vertex {v!r} has no boundary bond")
    return BoundaryGraph(
        g.vertices, g.wall_vertices | {v}, g.inner_bonds, _remove_one(g.boundary_bonds, v)
    )


def strip_isolated(g: BoundaryGraph) -> tuple[BoundaryGraph, int, int]:
    """Drop degree-0 vertices; return the graph and the (free, wall) counts removed."""
    touched = set(g.boundary_bonds)
    for u, v in g.inner_bonds:
        touched.add(u)
        touched.add(v)
    isolated = g.vertices - touched
    if not isolated:
        return g, 0, 0
    n_wall = len(isolated & g.wall_vertices)
    return (
        BoundaryGraph(g.vertices - isolated, g.wall_vertices - isolated, g.inner_bonds, g.boundary_bonds),
        len(isolated) - n_wall,
        n_wall,
    )


def lattice_graph(n_rows: int, m_cols: int) -> BoundaryGraph:
    """Rectangular grid with one wall bond on the leftmost site of each row.

    Vertex ``"r,c"`` is row r, column c (0-based, column 0 touches the wall).
    """
    if n_rows < 1 or m_cols < 1:
        raise ValueError("lattice dimensions must be positive")
    name = [[f"{r},{c}" for c in range(m_cols)] for r in range(n_rows)]
    bonds = []
    for r in range(n_rows):
        for c in range(m_cols):
            if c + 1 < m_cols:
                bonds.append((name[r][c], name[r][c + 1]))
            if r + 1 < n_rows:
                bonds.append((name[r][c], name[r + 1][c]))
    return BoundaryGraph.build(
        (v for row in name for v in row),
        (),
        bonds,
        (name[r][0] for r in range(n_rows)),
    )

