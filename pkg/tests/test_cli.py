import csv
import io
import json

import pytest

from bpotts.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lattice_all_methods(capsys):
    code, out, _ = run(capsys, "lattice", "--rows", "1", "--cols", "1", "--f", "2", "--B", "-1/2", "--C", "1/3")
    report = json.loads(out)
    assert code == 0 and report["agree"]
    assert [r["value"] for r in report["results"]] == ["4/3"] * 3
    assert out == json.dumps(report, sort_keys=True, indent=2) + "\n"


def test_lattice_trace_smoke(capsys):
    code, out, _ = run(capsys, "lattice", "--rows", "3", "--cols", "3", "--f", "2", "--B=-1/2", "--C", "1/3", "--method", "trace")
    results = json.loads(out)["results"]
    assert code == 0 and len(results) == 1 and results[0]["seconds"] >= 0


def test_zero_wall_weight_is_usage_error(capsys):
    code, _, err = run(capsys, "lattice", "--rows", "1", "--cols", "1", "--f", "2", "--B", "-1/2", "--C", "0/1", "--method", "trace")
    assert code == 2 and json.loads(err)["error"] == "ParameterError"


def test_physical_flags(capsys):
    code, out, _ = run(capsys, "lattice", "--rows", "2", "--cols", "2", "--f", "2", "--kT", "1.5", "--kappa", "0.5")
    report = json.loads(out)
    assert code == 0 and report["agree"] and report["physical"]["kT"] == 1.5


def test_trace_budget_exit_code(capsys):
    code, _, err = run(capsys, "lattice", "--rows", "1", "--cols", "5", "--f", "2", "--B", "-1/2", "--C", "1/3", "--method", "trace")
    assert code == 3 and json.loads(err)["error"] == "BudgetExceeded"


def write(tmp_path, data):
    p = tmp_path / "g.json"
    p.write_text(json.dumps(data))
    return str(p)


def test_graph_wall_neighbour(capsys, tmp_path):
    path = write(tmp_path, {"vertices": ["v", "w"], "wall_vertices": ["w"], "inner_bonds": [["v", "w"]], "boundary_bonds": ["v"]})
    code, out, _ = run(capsys, "graph", "--input", path, "--f", "3", "--B", "-1/2", "--C", "1/3")
    # (D + fC) + B(C + D) = (2/3 + 1) - 1/2
    assert code == 0 and {r["value"] for r in json.loads(out)["results"]} == {"7/6"}


def test_graph_empty(capsys, tmp_path):
    code, out, _ = run(capsys, "graph", "--input", write(tmp_path, {"vertices": []}), "--f", "2", "--B", "1", "--C", "1")
    assert code == 0 and json.loads(out)["results"][0]["value"] == "1"


def test_graph_dangling_bond(capsys, tmp_path):
    path = write(tmp_path, {"vertices": ["a"], "inner_bonds": [["a", "z"]]})
    code, _, err = run(capsys, "graph", "--input", path, "--f", "2", "--B", "1", "--C", "1")
    problems = json.loads(err)["problems"]
    assert code == 2 and any("a-z" in p for p in problems)


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-rows", "1", "--max-cols", "1")
    assert code == 0 and out.strip().splitlines()[-1].startswith("PASS")


def test_verify_mutation_is_caught(capsys):
    code, out, _ = run(capsys, "verify", "--max-rows", "2", "--max-cols", "2", "--mutate", "beta")
    assert code == 1
    first_fail = next(line for line in out.splitlines() if line.startswith("[FAIL]"))
    assert "three-way" in first_fail and "1x2 lattice" in first_fail


def test_bench_csv(capsys):
    code, out, _ = run(capsys, "bench", "--max-rows", "3", "--max-cols", "3")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert out.splitlines()[0] == "rows,cols,f,method,seconds,value"
    assert len({(r["rows"], r["cols"]) for r in rows}) == 9


def test_bench_skipped(capsys):
    code, out, _ = run(capsys, "bench", "--max-rows", "1", "--max-cols", "5", "--format", "json")
    rows = json.loads(out)["rows"]
    assert code == 0
    assert [r["value"] for r in rows if r["cols"] == 5 and r["method"] == "trace"] == ["skipped"]


def test_unknown_mutation_rejected():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--mutate", "d"])
    assert exc.value.code == 2
