import json

import pytest

from bpotts.graph import (
    BoundaryGraph,
    GraphError,
    contract_boundary,
    contract_inner,
    delete_boundary,
    delete_inner,
    graph_from_dict,
    lattice_graph,
    load_graph,
    strip_isolated,
    validate,
)
from bpotts.model import make_model
from bpotts.partition import brute_force_z

build = BoundaryGraph.build


def test_empty_graph_valid():
    assert validate(BoundaryGraph()) == []


def test_unknown_vertex_reported():
    g = BoundaryGraph.build(["a"], inner_bonds=[("a", "z")], check=False)
    problems = validate(g)
    assert len(problems) == 1 and "'z'" in problems[0]
    with pytest.raises(GraphError) as exc:
        build(["a"], inner_bonds=[("a", "z")])
    assert exc.value.violations == problems


def test_wall_listed_twice_collapses():
    g = graph_from_dict({"vertices": ["a"], "wall_vertices": ["a", "a"]})
    assert g.wall_vertices == {"a"}


def test_wall_vertex_must_exist():
    with pytest.raises(GraphError):
        build(["a"], wall_vertices=["b"])


def test_contract_path():
    h = contract_inner(build("ab", inner_bonds=[("a", "b")]), ("a", "b"))
    assert len(h.vertices) == 1 and h.n_bonds() == 0


def test_contract_parallel_leaves_loop():
    h = contract_inner(build("ab", inner_bonds=[("a", "b"), ("a", "b")]), ("a", "b"))
    assert h.inner_bonds == (("a", "a"),)


def test_contract_onto_wall_preserves_z():
    g = build("abc", wall_vertices="c", inner_bonds=[("a", "c"), ("a", "b"), ("b", "c")], boundary_bonds="b")
    h = contract_inner(g, ("a", "c"))
    assert h.wall_vertices == {"a"}
    m = make_model(3, -1, 5)  # B = -1 turns the inner-bond recursion into Z_del - Z_con
    assert brute_force_z(g, m) == brute_force_z(delete_inner(g, ("a", "c")), m) - brute_force_z(h, m)


def test_boundary_edits():
    g = build("a", boundary_bonds="a")
    assert contract_boundary(g, "a") == build("a", wall_vertices="a")
    two = build("a", boundary_bonds="aa")
    assert delete_boundary(two, "a").boundary_bonds == ("a",)
    walled = build("a", wall_vertices="a", boundary_bonds="a")
    h = contract_boundary(walled, "a")
    assert h.wall_vertices == {"a"} and h.boundary_bonds == ()


def test_edit_preconditions():
    g = build("ab", inner_bonds=[("a", "b")])
    with pytest.raises(KeyError):
        delete_inner(g, ("a", "a"))
    with pytest.raises(KeyError):
        delete_boundary(g, "a")


def test_strip_isolated():
    assert strip_isolated(build("a")) == (BoundaryGraph(), 1, 0)
    assert strip_isolated(build("a", wall_vertices="a")) == (BoundaryGraph(), 0, 1)
    g = build("ab", inner_bonds=[("a", "b")])
    assert strip_isolated(g) == (g, 0, 0)


@pytest.mark.parametrize("n,m", [(1, 1), (2, 2), (3, 2), (2, 4)])
def test_lattice_counts(n, m):
    g = lattice_graph(n, m)
    assert len(g.vertices) == n * m
    assert len(g.inner_bonds) == n * (m - 1) + m * (n - 1)
    assert len(g.boundary_bonds) == n
    assert not g.wall_vertices


def test_json_roundtrip(tmp_path):
    g = build("abc", wall_vertices="c", inner_bonds=[("a", "b"), ("b", "c")], boundary_bonds="aa")
    path = tmp_path / "g.json"
    path.write_text(json.dumps(g.to_dict()))
    assert load_graph(str(path)) == g


def test_load_rejects_malformed(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(GraphError):
        load_graph(str(path))
    with pytest.raises(GraphError):
        graph_from_dict({"vertices": [], "extra": 1})
    with pytest.raises(GraphError):
        graph_from_dict({"vertices": ["a"], "inner_bonds": [["a"]]})
