from __future__ import annotations

import io
import json

import pytest

from symtree.cli import main
from symtree.extremal import fig2_spider
from symtree.graph import to_edge_list

C6 = "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n"


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_order11_spider(tmp_path, capsys, monkeypatch):
    f = tmp_path / "t.txt"
    f.write_text(to_edge_list(fig2_spider()))
    code, out, _ = run(capsys, monkeypatch, ["compute", "--input", str(f)])
    assert code == 0
    rec = json.loads(out)
    assert list(rec) == ["n", "D", "F", "fixing_witness", "density"]
    assert (rec["n"], rec["D"], rec["F"], rec["density"]) == (11, 2, 4, "4/11")
    assert len(rec["fixing_witness"]) == 4


def test_compute_stdin_params_and_brute(capsys, monkeypatch):
    text = to_edge_list(fig2_spider())
    code, out, _ = run(capsys, monkeypatch, ["compute", "--input", "-", "--params", "D,ecc"], text)
    assert code == 0
    assert json.loads(out) == {"n": 11, "D": 2, "radius": 2, "diameter": 4,
                               "eccentric_sequence": [[2, 1], [3, 6], [4, 4]]}
    code, out, _ = run(capsys, monkeypatch, ["compute", "--input", "-", "--brute"], C6)
    assert code == 0 and json.loads(out)["F"] == 2 and json.loads(out)["D"] == 2


def test_compute_errors(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["compute", "--input", "-"], C6)
    assert code == 1 and "line 6" in err and "--brute" in err
    code, _, err = run(capsys, monkeypatch, ["compute", "--input", "/nonexistent/file"])
    assert code == 1 and err.startswith("symtree: error:")
    with pytest.raises(SystemExit) as info:
        main(["compute", "--input", "-", "--params", "Z"])
    assert info.value.code == 2


def test_spectrum(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["spectrum", "--input", "-"], C6)
    assert code == 0 and json.loads(out) == {"D": 2, "spectrum": [3, 2]}


def test_gen_universal(tmp_path, capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["gen", "universal", "--kind", "T", "--r", "2", "--D", "2"])
    assert code == 0 and len(out.splitlines()) == 16
    code, out, _ = run(capsys, monkeypatch, ["gen", "universal", "--kind", "U", "--r", "2", "--D", "3",
                                             "--format", "json"])
    rec = json.loads(out)
    assert rec["order"] == 24 and rec["kind"] == "U"
    code, out, _ = run(capsys, monkeypatch, ["gen", "universal", "--r", "2", "--D", "2", "--catalog-only"])
    assert out.splitlines()[0] == "canonical_code,height,order,capacity"
    dot = tmp_path / "u.dot"
    code, _, _ = run(capsys, monkeypatch, ["gen", "universal", "--r", "2", "--D", "2", "--dot", str(dot)])
    assert dot.read_text().startswith("graph T_2_2 {")


def test_gen_universal_errors(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["gen", "universal", "--kind", "U", "--r", "3", "--D", "2"])
    assert code == 1 and "--experimental" in err
    code, _, err = run(capsys, monkeypatch, ["gen", "universal", "--r", "3", "--D", "3", "--budget", "100"])
    assert code == 1 and "--catalog-only" in err
    code, _, err = run(capsys, monkeypatch, ["gen", "universal", "--kind", "U", "--r", "3", "--D", "2",
                                             "--experimental", "--catalog-only"])
    assert code == 0 and "experimental" in err


def test_gen_extremal(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["gen", "extremal", "--id", "tk-family", "--params", "k=2", "D=3"])
    assert code == 0 and len(out.splitlines()) == 7
    code, out, _ = run(capsys, monkeypatch, ["gen", "extremal", "--id", "fig2-spider", "--format", "dot"])
    assert out.startswith("graph G {")
    code, out, _ = run(capsys, monkeypatch, ["gen", "extremal", "--id", "gk", "--params", "k=7", "--certify"])
    assert code == 0 and json.loads(out)["swaps_valid"] == 127
    code, _, err = run(capsys, monkeypatch, ["gen", "extremal", "--id", "path", "--params", "k=3"])
    assert code == 1 and "takes parameters" in err


def test_verify(capsys, monkeypatch):
    code, out1, _ = run(capsys, monkeypatch, ["verify", "--check", "fd-2", "--max-n", "9", "--jobs", "1",
                                              "--no-timing"])
    assert code == 0
    code, out2, _ = run(capsys, monkeypatch, ["verify", "--check", "fd-2", "--max-n", "9", "--jobs", "2",
                                              "--no-timing"])
    assert out1 == out2 and out1.startswith("check,n,instances,violations,seconds\n")
    code, out, _ = run(capsys, monkeypatch, ["verify", "--list"])
    assert code == 0 and "oracle-eq" in out
    code, _, err = run(capsys, monkeypatch, ["verify", "--check", "oracle-eq", "--max-n", "20"])
    assert code == 1 and "max-n" in err


def test_verify_reports_violations(capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch, ["verify", "--check", "univ-U", "--max-n", "3", "--jobs", "1"])
    assert code == 1 and "rho^2=3 but F=2" in err
