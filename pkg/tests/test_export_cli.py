import json
import subprocess
import sys

import pytest

from dcell import cli, core, export
from dcell.core import Params, build_graph


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("k,n,lines", [(1, 2, 6), (0, 3, 3), (2, 2, 63), (1, 4, 40)])
def test_gen_edgelist_line_counts(capsys, k, n, lines):
    code, out, _ = run(capsys, "gen", "--k", str(k), "--n", str(n), "--format", "edgelist")
    assert code == 0
    assert len(out.splitlines()) == lines


def test_gen_edgelist_sorted_and_tagged(capsys):
    _, out, _ = run(capsys, "gen", "--k", "2", "--n", "2")
    rows = [line.split("\t") for line in out.splitlines()]
    keys = [(core.uid(core.parse_label(a), 2, 2), int(lev)) for a, _, lev in rows]
    assert keys == sorted(keys)
    assert rows[0] == ["0,0,0", "0,0,1", "0"]


def test_gen_unknown_format_is_usage_error():
    with pytest.raises(SystemExit) as info:
        cli.main(["gen", "--k", "1", "--n", "2", "--format", "graphml"])
    assert info.value.code == 2


def test_gen_budget_refusal(capsys):
    code, out, err = run(capsys, "gen", "--k", "3", "--n", "3", "--budget", "100")
    assert code == 2 and out == ""
    assert "24492" in err


def test_gen_writes_file_and_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.dot", tmp_path / "b.dot"
    for path in (a, b):
        assert run(capsys, "gen", "--k", "2", "--n", "3", "--format", "dot", "--out", str(path))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert "[level=2]" in a.read_text()


@pytest.mark.parametrize("k,n", [(0, 3), (1, 2), (2, 2), (2, 3)])
def test_formats_agree_and_round_trip(k, n):
    g = build_graph(Params(k, n))
    p = Params(k, n)
    from_edgelist = export.read_edgelist(export.to_edgelist(g), p)
    from_dot = export.read_dot(export.to_dot(g), p)
    from_json = export.read_json(export.to_json(g))
    for h in (from_edgelist, from_dot, from_json):
        assert g.same_graph(h)
    doc = json.loads(export.to_json(g))
    assert doc["params"] == {"k": k, "n": n} and doc["t"] == g.num_vertices


def test_neighbors_lemma4(capsys):
    code, out, _ = run(capsys, "neighbors", "--k", "4", "--n", "2", "--vertex", "0,0,0,2,1")
    assert code == 0
    assert "4\t6,0,0,0,0" in out.splitlines()


def test_neighbors_lemma6(capsys):
    _, out, _ = run(capsys, "neighbors", "--k", "2", "--n", "3", "--vertex", "0,1,2")
    lines = out.splitlines()
    assert "1\t0,3,1" in lines
    # closed-form partner: copy uid_1(0,1,2)+1 = n+3 = 6
    assert "2\t6,0,0" in lines
    assert [line.split("\t")[0] for line in lines] == ["0", "0", "1", "2"]


def test_neighbors_degree(capsys):
    _, out, _ = run(capsys, "neighbors", "--k", "1", "--n", "2", "--vertex", "0,0")
    assert len(out.splitlines()) == 2


def test_neighbors_invalid_label(capsys):
    code, _, err = run(capsys, "neighbors", "--k", "2", "--n", "2", "--vertex", "0,9,0")
    assert code == 2 and "a_1" in err
    code, _, _ = run(capsys, "neighbors", "--k", "2", "--n", "2", "--vertex", "zero")
    assert code == 2


def test_cycles_command(capsys):
    assert run(capsys, "cycles", "--k", "2", "--n", "2", "--vertex", "0,2,0", "--length", "6")[1] == "1\n"
    assert run(capsys, "cycles", "--k", "3", "--n", "2", "--vertex", "0,0,2,1", "--length", "6")[1] == "1\n"
    code, out, _ = run(capsys, "cycles", "--k", "2", "--n", "2", "--vertex", "3,1,1",
                       "--length", "6", "--list")
    lines = out.splitlines()
    assert code == 0 and int(lines[0]) == len(lines) - 1 >= 2
    assert "3,1,1;3,1,0;2,1,0;2,1,1;4,1,0;4,1,1" in lines


def test_certify_command(capsys):
    code, out, _ = run(capsys, "certify", "--k", "1", "--n", "3")
    assert code == 0 and json.loads(out)["decision"] == "Transitive"
    code, out, _ = run(capsys, "certify", "--k", "2", "--n", "2", "--exhaustive")
    d = json.loads(out)
    assert code == 0 and d["decision"] == "NotTransitive" and d["orbits"]["count"] >= 2
    code, out, _ = run(capsys, "certify", "--k", "2", "--n", "4")
    d = json.loads(out)
    assert d["witness"]["u"] == "0,0,0" and d["witness"]["v"] == "0,1,2"


def test_certify_inconclusive(capsys):
    code, _, err = run(capsys, "certify", "--k", "1", "--n", "9", "--budget", "10")
    assert code == 3 and "inconclusive" in err


def test_paper_check_command(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, _, _ = run(capsys, "paper-check", "--out", str(path))
    assert code == 0
    report = json.loads(path.read_text())
    assert report["ok"] and len(report["claims"]) >= 12
    for c in report["claims"]:
        assert set(c) == {"id", "location", "expected", "computed", "status"}


def test_paper_check_detects_tampered_neighbor_rule(monkeypatch, capsys):
    monkeypatch.setattr(core, "_partner", lambda i, m: (m + 1, i) if m > i else (m, i))
    code, _, err = run(capsys, "paper-check")
    assert code == 1
    assert "failing claims:" in err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "dcell", "neighbors", "--k", "1", "--n", "3",
                          "--vertex", "0,0"], capture_output=True, text=True, check=True)
    assert res.stdout == "0\t0,1\n0\t0,2\n1\t1,0\n"
