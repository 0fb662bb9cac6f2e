from __future__ import annotations

import json

import pytest

from linkrep.cli import main

from conftest import HOPF, TREFOIL


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse(capsys):
    code, out, _ = run(capsys, "parse", "--pd", HOPF)
    assert code == 0 and "2 crossings" in out


def test_parse_file(tmp_path, capsys):
    f = tmp_path / "t.pd"
    f.write_text(TREFOIL)
    code, out, _ = run(capsys, "--json", "parse", "--pd", f"@{f}")
    assert code == 0 and json.loads(out)["arcs"] == 3


def test_invalid_input_exit_code(capsys):
    code, _, err = run(capsys, "parse", "--pd", "X[1,2,3]")
    assert code == 2 and "error" in err
    assert run(capsys, "parse", "--pd", "@/nonexistent/file")[0] == 2
    assert run(capsys, "analyze", "--name", "Nope")[0] == 2
    assert run(capsys, "graph", "classify", "--graph", "x;")[0] == 2
    assert run(capsys, "parse")[0] == 2


def test_json_flag_positions(capsys):
    a = run(capsys, "--json", "alexander", "--name", "L5m3")[1]
    b = run(capsys, "alexander", "--json", "--name", "L5m3")[1]
    assert a == b
    data = json.loads(a)
    assert data["multi_norm"] == 300 and data["instanton_bound"] == 19


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "--json", "--pd", HOPF)
    data = json.loads(out)
    assert abs(data["linking_matrix"][0][1]) == 1


def test_graph_classify(capsys):
    code, out, _ = run(capsys, "graph", "classify", "--json", "--graph", "4;0-1,1-2,2-3,3-0")
    assert json.loads(out)["verdict"]["variant"] == "Coloring"
    code, out, _ = run(capsys, "graph", "classify", "--name", "G0Link")
    assert out.startswith("InducedG0")


def test_rep_commands(capsys):
    code, out, _ = run(capsys, "rep", "coloring", "--name", "L6n1", "--phi", "ijk")
    assert json.loads(out)["report"]["irreducible"]
    code, out, _ = run(capsys, "rep", "dihedral", "--name", "L8n8", "--enumerate", "--samples", "1/4,1/3")
    data = json.loads(out)
    assert data["count"] == "Infinite" and data["irreducible"] == 8
    assert run(capsys, "rep", "coloring", "--name", "Hopf", "--phi", "ij")[0] == 2


def test_certify_and_verify(tmp_path, capsys):
    code, out, _ = run(capsys, "certify", "--json", "--name", "Trefoil", "--prime", "5")
    data = json.loads(out)
    assert data["status"] == "found" and data["verified"]
    f = tmp_path / "c.json"
    f.write_text(out)
    assert run(capsys, "verify-cert", "--name", "Trefoil", "--cert", f"@{f}")[1].strip() == "valid"
    bad = data["certificate"]
    bad["arcs"][0][0] = (bad["arcs"][0][0] + 1) % 5
    assert run(capsys, "verify-cert", "--name", "Trefoil", "--cert", json.dumps(bad))[1].strip() == "invalid"
    assert run(capsys, "verify-cert", "--name", "Trefoil", "--cert", "{}")[0] == 2


def test_certify_exhausted(capsys):
    code, out, _ = run(capsys, "rep", "modp", "--json", "--name", "Hopf", "--prime", "3")
    assert code == 0 and json.loads(out)["status"] == "exhausted"
    assert run(capsys, "certify", "--name", "Hopf", "--prime", "4")[0] == 2


def test_families(capsys):
    code, out, _ = run(capsys, "families", "list")
    assert "L5m3" in out
    code, out, _ = run(capsys, "families", "emit", "Luv(3,1)")
    assert out.startswith("PD[")


def test_analyze(capsys, monkeypatch):
    monkeypatch.setenv("LINKREP_THREADS", "2")
    code, out, _ = run(capsys, "analyze", "--name", "Hopf")
    assert code == 0 and "HopfSumConsistent" in out
    monkeypatch.setenv("LINKREP_THREADS", "1")
    a = run(capsys, "analyze", "--json", "--name", "Hopf", "--primes", "3,5,7")[1]
    monkeypatch.setenv("LINKREP_THREADS", "3")
    b = run(capsys, "analyze", "--json", "--name", "Hopf", "--primes", "3,5,7")[1]
    assert a == b
    assert json.loads(a)["conclusion"] == "HopfSumConsistent"


def test_internal_error_exit_code(capsys, monkeypatch):
    from linkrep import cli
    from linkrep.errors import InternalInvariantViolation

    def boom(*a, **k):
        raise InternalInvariantViolation("synthetic")

    monkeypatch.setattr(cli, "alexander_report", boom)
    assert run(capsys, "alexander", "--name", "Hopf")[0] == 3


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["certify", "--name", "Hopf"])
    assert e.value.code == 2
