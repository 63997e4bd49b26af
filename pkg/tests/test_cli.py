import json
import re
import subprocess
import sys

import pytest

from pauligeo.cli import main
from pauligeo.export import graph_from_json, to_csv, to_dot, to_json
from pauligeo.graphs import Graph, rook_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def dot_counts(text):
    nodes = len(re.findall(r"^\s*\d+ \[label=", text, re.M))
    edges = len(re.findall(r"^\s*\d+ -- \d+", text, re.M))
    return nodes, edges


def test_pauli_graph_dot(capsys):
    code, out, _ = run(capsys, "graph", "--dims", "2,2,2", "--format", "dot")
    assert code == 0
    assert out.startswith("graph G {")
    assert dot_counts(out) == (63, 945)


def test_dual_dot(capsys):
    code, out, _ = run(capsys, "dual", "--dims", "3,3", "--format", "dot")
    assert code == 0
    assert dot_counts(out) == (40, 240)
    assert 'label="L1"' in out


def test_dual_json(capsys):
    code, out, _ = run(capsys, "graph", "--dims", "2,3", "--target", "dual", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["nodes"]) == 12 and len(doc["edges"]) == 30
    assert sum(1 for e in doc["edges"] if e[2] == 2) == 12
    g = graph_from_json(out)
    assert g.n == 12 and len(g.edges) == 30


def test_json_round_trip():
    g = Graph(4, frozenset([(0, 1), (2, 3)]), {(0, 1): 2, (2, 3): 1}, ("a", "b", "c", "d"))
    h = graph_from_json(to_json(g))
    assert (h.n, h.edges, h.weights, h.labels) == (g.n, g.edges, g.weights, g.labels)
    r = rook_graph(3, 3)
    assert graph_from_json(to_json(r)).edges == r.edges


def test_empty_graph_exports():
    g = Graph(3)
    assert to_csv(g).strip() == "u,v,w"
    assert "--" not in to_dot(g)
    assert json.loads(to_json(g))["edges"] == []


def test_spectrum_text(capsys):
    code, out, _ = run(capsys, "spectrum", "--dims", "3,3", "--target", "dual")
    assert code == 0 and out.strip() == "{-4:15, 2:24, 12:1}"
    code, out, _ = run(capsys, "spectrum", "--dims", "3,3")
    assert out.strip() == "{-7:15, -1:40, 5:24, 25:1}"


def test_spectrum_csv(capsys):
    code, out, _ = run(capsys, "spectrum", "--dims", "2,2,2", "--format", "csv")
    assert out.splitlines() == ["eigenvalue,multiplicity", "-5,27", "3,35", "30,1"]


@pytest.mark.parametrize("argv", [
    ("spectrum", "--dims", "3,3", "--format", "dot"),
    ("graph", "--dims", "2,4"),
    ("graph",),
    ("verify", "--format", "json"),
    ("ringline", "--dims", "1,3"),
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == "" and "usage error" in err


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["graph", "--dims", "x,y"])
    assert exc.value.code == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    from pauligeo import verify
    monkeypatch.setitem(verify.LINE_CENSUS, (2, 3), (13, 5))
    code, out, _ = run(capsys, "verify", "--dims", "2,3")
    assert code == 1
    assert "[FAIL]" in out and "VERIFICATION FAILED" in out


def test_verify_single_system(capsys):
    code, out, _ = run(capsys, "verify", "--dims", "2,3")
    assert code == 0
    assert "[FAIL]" not in out and out.rstrip().endswith("ALL CHECKS PASSED")


def test_out_file(tmp_path, capsys):
    path = tmp_path / "w.csv"
    code, out, _ = run(capsys, "dual", "--dims", "2,3", "--format", "csv", "--out", str(path))
    assert code == 0 and out == ""
    rows = path.read_text().splitlines()
    assert rows[0] == "u,v,w" and len(rows) == 31


def test_repeated_runs_identical(capsys):
    outs = [run(capsys, "lines", "--dims", "3,3", "--format", "json")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    assert len(json.loads(outs[0])) == 40


def test_other_commands(capsys, caplog):
    code, out, _ = run(capsys, "operators", "--dims", "2,3", "--format", "csv")
    assert code == 0 and len(out.splitlines()) == 36
    code, out, _ = run(capsys, "mubs", "--dims", "2,3")
    assert out.startswith("maximum 3 pairwise disjoint lines, 24 witnesses")
    code, out, _ = run(capsys, "hyperplanes", "--dims", "2,3", "--format", "json")
    assert len(json.loads(out)) == 4
    code, out, _ = run(capsys, "ringline")
    assert "projective line: 12 points" in out
    code, out, _ = run(capsys, "ringline", "--dims", "2,2", "--format", "json")
    assert len(json.loads(out)["points"]) == 9
    code, out, _ = run(capsys, "lines", "--dims", "2,2", "--verbose")
    assert code == 0 and out.startswith("15 lines")
    assert "built geometry" in caplog.text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pauligeo", "spectrum", "--dims", "2,3",
                           "--target", "dual"], capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "{-2:6, 1:3, 2:2, 5:1}"
