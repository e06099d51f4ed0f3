import io
import json
import sys

import pytest

from nhca.catalog import make
from nhca.cli import main
from nhca.graph import cycle_graph, parse_graph6, write_graph6
from nhca.models import ArcModel, verify_nhca_model


def run(argv, stdin=b"", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(stdin)))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def g6(g):
    return write_graph6(g) + b"\n"


def test_recognize_c5(monkeypatch, capsys):
    code, out, _ = run(["recognize"], g6(cycle_graph(5)), monkeypatch, capsys)
    rec = json.loads(out)
    assert code == 0 and rec["verdict"] == "nhca"
    assert verify_nhca_model(cycle_graph(5), ArcModel.from_json(rec["model"]))


def test_recognize_net(monkeypatch, capsys):
    code, out, _ = run(["recognize"], g6(make("net:2").graph), monkeypatch, capsys)
    rec = json.loads(out)
    assert code == 1 and rec["verdict"] == "obstruction" and rec["witness"]["family"] == "net:2"


def test_recognize_k1_and_bad_line(monkeypatch, capsys):
    code, out, _ = run(["recognize"], b"@\nB\n", monkeypatch, capsys)
    lines = [json.loads(x) for x in out.splitlines()]
    assert lines[0]["verdict"] == "nhca"
    assert "offset" in lines[1]["error"]
    assert code == 2


def test_recognize_edges_and_emit(tmp_path, monkeypatch, capsys):
    path = tmp_path / "c4.txt"
    path.write_text("4 4\n0 1\n1 2\n2 3\n3 0\n")
    code, out, _ = run(["recognize", "--format", "edges", "--emit", "verdict", "--oracle", str(path)], b"", monkeypatch, capsys)
    rec = json.loads(out)
    assert code == 0 and rec == {"input": str(path), "n": 4, "verdict": "nhca", "oracle": "agree"}
    code, out, _ = run(["recognize", "--emit", "dot"], g6(cycle_graph(4)), monkeypatch, capsys)
    assert out.startswith("graph G {")


def test_recognize_jobs_preserves_order(monkeypatch, capsys):
    data = b"".join(g6(g) for g in (cycle_graph(4), make("g1").graph, cycle_graph(6)))
    code, out, _ = run(["recognize", "--jobs", "2", "--emit", "verdict"], data, monkeypatch, capsys)
    verdicts = [json.loads(x)["verdict"] for x in out.splitlines()]
    assert verdicts == ["nhca", "obstruction", "nhca"] and code == 1


def test_catalog(monkeypatch, capsys):
    code, out, _ = run(["catalog", "wheel:4"], b"", monkeypatch, capsys)
    rec = json.loads(out)
    assert code == 0 and rec["n"] == 5 and rec["m"] == 8
    assert parse_graph6(rec["graph6"]) == make("wheel:4").graph
    code, out, _ = run(["catalog", "gimbel:2"], b"", monkeypatch, capsys)
    rec = json.loads(out)
    assert rec["n"] == 5 and rec["marked_vertex"] == 0
    code, _, err = run(["catalog", "net:1"], b"", monkeypatch, capsys)
    assert code == 2 and "net" in err


def test_verify_theorem_small(monkeypatch, capsys):
    code, out, _ = run(["verify-theorem", "--max-n", "5"], b"", monkeypatch, capsys)
    rec = json.loads(out)
    assert code == 0 and rec["checked"] == 52 and rec["disagreements"] == 0


def test_verify_theorem_refuses_large(monkeypatch, capsys):
    code, _, err = run(["verify-theorem", "--max-n", "9"], b"", monkeypatch, capsys)
    assert code == 2 and "refused" in err
    code, _, _ = run(["verify-theorem", "--max-n", "8"], b"", monkeypatch, capsys)
    assert code == 2


def test_hidden_oracle_command(monkeypatch, capsys):
    code, out, _ = run(["oracle", "--kind", "interval"], g6(cycle_graph(4)), monkeypatch, capsys)
    rec = json.loads(out)
    assert code == 0 and rec["decided"] and not rec["member"]


def test_usage_error(monkeypatch, capsys):
    code, _, _ = run(["frobnicate"], b"", monkeypatch, capsys)
    assert code == 2
