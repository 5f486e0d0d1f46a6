from __future__ import annotations

import io
import json
import sys


from ascap.cli import main
from ascap.enumeration import GenSpec, generate_graph6
from ascap.graph import cycle, path, to_graph6


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_then_classify(capsys):
    code, out, _ = run(["construct", "theta", "1", "2", "6", "--format", "graph6"], capsys)
    assert code == 0 and len(out.splitlines()) == 1
    code, out, _ = run(["classify", out.strip(), "--format", "json"], capsys)
    rec = json.loads(out)
    assert code == 0 and rec["almost_self_centered"] and rec["theta"] == [1, 2, 6]


def test_construct_formats(capsys):
    assert "graph G {" in run(["construct", "cycle", "4", "--format", "dot"], capsys)[1]
    assert json.loads(run(["construct", "star", "4", "--format", "json"], capsys)[1])["size"] == 3
    assert "0: 1 2 3" in run(["construct", "star", "4", "--format", "table"], capsys)[1]


def test_verify_json(capsys):
    code, out, _ = run(["verify", "thm8", "--k", "3", "--format", "json"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["claimed"] == {"min_order": 12} and rep["status"] == "pass"


def test_metrics_on_path(capsys):
    code, out, _ = run(["metrics", "Ch", "--format", "json"], capsys)
    rec = json.loads(out)
    assert code == 0 and rec["radius"] == 2 and rec["diameter"] == 3 and len(rec["center"]) == 2


def test_stream_filter(capsys, monkeypatch):
    lines = generate_graph6(GenSpec(order=5))
    code, out, err = run(["classify", "-", "--filter", "asc"], capsys, "\n".join(lines) + "\n", monkeypatch)
    first = out
    assert code == 0 and "of 21 graphs" in err
    assert all(line in lines for line in out.split())
    code, out, _ = run(["classify", "-", "--filter", "asc"], capsys, "\n".join(lines) + "\n", monkeypatch)
    assert out == first


def test_filter_keeps_cycle(capsys, monkeypatch):
    c6, p4 = to_graph6(cycle(6)), to_graph6(path(4))
    code, out, err = run(["classify", "-", "--filter", "self-centered"], capsys, f"{p4}\n{c6}\n", monkeypatch)
    assert code == 0 and out == c6 + "\n" and "1 of 2" in err


def test_empty_input(capsys, monkeypatch):
    code, out, _ = run(["classify", "-", "--filter", "asc"], capsys, "", monkeypatch)
    assert code == 0 and out == ""


def test_bad_line_exit_three(capsys, monkeypatch):
    code, _, err = run(["classify", "-", "--filter", "asc"], capsys, "Ch\nC~~~\n", monkeypatch)
    assert code == 3 and "line 2" in err


def test_usage_errors(capsys):
    assert run(["construct", "nonsense", "3"], capsys)[0] == 2
    assert run(["verify", "thm99", "--n", "5"], capsys)[0] == 2
    assert run(["verify", "thm9"], capsys)[0] == 2
    assert run(["verify", "thm9", "--n", "30"], capsys)[0] == 2
    assert run(["frobnicate"], capsys)[0] == 2
    assert run(["construct", "cycle_pendant", "6"], capsys)[0] == 2
    assert run(["metrics", "Bo@"], capsys)[0] == 3


def test_enumerate_and_scan(capsys):
    code, out, err = run(["enumerate", "--order", "5"], capsys)
    assert code == 0 and len(out.split()) == 21
    code, out, _ = run(["scan", "--order", "7", "--filter", "asc", "--stat", "girth"], capsys)
    assert code == 0 and json.loads(out)["value"] == 6


def test_help_lists_subcommands(capsys):
    code, out, _ = run(["--help"], capsys)
    assert code == 0
    for sub in ("construct", "classify", "metrics", "enumerate", "scan", "verify", "suite"):
        assert sub in out
