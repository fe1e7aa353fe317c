import io
import json

import pytest

from ringgraph.cli import main
from ringgraph.corpus import get_ring
from ringgraph.graphcore import import_json, shape
from ringgraph.ringcore import dumps_ring


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def mutant_file(tmp_path):
    E4 = get_ring("E4")
    text = dumps_ring(E4).splitlines()
    # mul row for element 1 is the second line after "mul"
    k = text.index("mul") + 2
    row = text[k].split()
    row[1] = "0" if row[1] != "0" else "1"
    text[k] = " ".join(row)
    p = tmp_path / "broken.ring"
    p.write_text("\n".join(text) + "\n")
    return p


def test_ring_list():
    code, out = run("ring", "list")
    assert code == 0
    assert "E9" in out and "UT2Z3" in out


def test_ring_show_E9():
    code, out = run("ring", "show", "E9")
    assert code == 0
    assert "order: 9" in out
    assert "|Z|: 1" in out
    assert "|K|: 3" in out


def test_ring_show_Z6():
    code, out = run("ring", "show", "Z6")
    assert "commutative: yes" in out
    assert "unity: 1" in out


def test_ring_validate(tmp_path, mutant_file):
    good = tmp_path / "e9.ring"
    good.write_text(dumps_ring(get_ring("E9")))
    assert run("ring", "validate", str(good))[0] == 0
    code, out = run("ring", "validate", str(mutant_file))
    assert code == 1
    assert "INVALID" in out and "witness" in out


def test_graph_build_dot():
    code, out = run("graph", "build", "--ring", "E4", "--r", "a+b", "--out", "dot")
    assert code == 0
    assert out.count(" -- ") == 3
    assert all(f"  0 -- {k};" in out for k in (1, 2, 3))


def test_graph_build_json_induced(tmp_path):
    target = tmp_path / "d.json"
    code, _ = run("graph", "build", "--ring", "E9", "--r", "a+2b", "--induced", "--out", "json",
                  "-o", str(target))
    assert code == 0
    G = import_json(target.read_text())
    s = shape(G)
    assert G.vertex_count == 8 and s.is_disjoint_union_of_edges and s.edge_components == 4


def test_graph_build_E9_zero():
    code, out = run("graph", "build", "--ring", "E9", "--r", "0")
    assert code == 0
    assert out.count(" -- ") == 24  # eight vertices of degree 6


def test_graph_output_is_stable():
    a = run("graph", "build", "--ring", "F9", "--r", "x+2y", "--out", "json")[1]
    b = run("graph", "build", "--ring", "F9", "--r", "x+2y", "--out", "json")[1]
    assert a == b
    assert json.loads(a)["name"] == "Gamma_F9^x+2y"


def test_usage_errors(capsys):
    assert run("graph", "build", "--ring", "E4", "--r", "z")[0] == 2
    assert run("ring", "show", "Q7")[0] == 2
    assert run("ring", "show")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("verify", "--suite", "nope")[0] == 2
    assert "error" in capsys.readouterr().err


def test_verify_default(tmp_path):
    report = tmp_path / "r.json"
    code, out = run("verify", "--suite", "all", "--json", str(report))
    assert code == 0
    doc = json.loads(report.read_text())
    assert doc["summary"]["fail"] == 0
    assert "total" in out


def test_verify_degree_on_integers():
    code, _ = run("verify", "--suite", "degree", "--corpus", "Z2..Z9")
    assert code == 0


def test_verify_mutant_file(mutant_file, tmp_path):
    report = tmp_path / "m.json"
    code, out = run("verify", "--corpus", str(mutant_file), "--json", str(report))
    assert code == 1
    assert "FAIL: axioms" in out
    fails = [r for r in json.loads(report.read_text())["results"] if r["status"] == "fail"]
    assert fails and all(r["witness"] for r in fails)


def test_verify_budget_exhaustion(monkeypatch):
    monkeypatch.setenv("RINGGRAPH_NODE_BUDGET", "0")
    code, _ = run("verify", "--suite", "isoclinism", "--corpus", "E9,F9")
    assert code == 3


def test_iso_check():
    code, out = run("iso", "check", "E4", "F4")
    assert code == 0
    assert out.count("verified") == 2
    code, out = run("iso", "check", "E4", "Z4")
    assert code == 0 and "no isoclinism" in out
    code, out = run("iso", "check", "E9", "F9", "--r", "a+2b")
    assert code == 0 and out.count("verified") == 1


def test_iso_check_json(tmp_path):
    from ringgraph.isoclinism import IsoclinismWitness
    p = tmp_path / "w.json"
    assert run("iso", "check", "E9", "F9", "--json", str(p))[0] == 0
    w = IsoclinismWitness.from_json(p.read_text())
    assert len(w.psi) == 3


def test_iso_check_r_outside_derived_subgroup():
    assert run("iso", "check", "E9", "F9", "--r", "a")[0] == 2
