"""
Tests for the command-line interface: outputs, exit codes and determinism.
"""

import json
import math
from dataclasses import replace

import pytest

from spreadcheck import cli
from spreadcheck.certificates.base import Check
from spreadcheck.certificates.theorems import audit_graph
from spreadcheck.enumeration.generate import random_graphs
from spreadcheck.graphs.families import cycle_graph, star_graph
from spreadcheck.io.edge_list import emit_edge_list
from spreadcheck.io.graph6 import emit_graph6


@pytest.fixture
def p4_file(tmp_path, p4):
    path = tmp_path / "p4.g6"
    path.write_text(emit_graph6(p4) + "\n")
    return str(path)


@pytest.fixture
def mixed_file(tmp_path):
    graphs = [star_graph(5), cycle_graph(6)] + list(random_graphs(6, 3, 12, seed=4))
    path = tmp_path / "mixed.g6"
    path.write_text("".join(emit_graph6(G) + "\n" for G in graphs))
    return str(path)


def test_audit_p4(p4_file, capsys):
    assert cli.run(["audit", p4_file]) == 0
    out = capsys.readouterr().out
    assert "Distance3" in out
    assert "1.171572875" in out
    assert "pass" in out


def test_audit_json_documents(p4_file, tmp_path, p4):
    target = tmp_path / "report.json"
    assert cli.run(["audit", p4_file, "--json", str(target)]) == 0
    documents = json.loads(target.read_text())
    assert len(documents) == 1
    document = documents[0]
    assert document["schema_version"] == "1"
    assert document["input"]["graph6"] == emit_graph6(p4)
    assert document["case"] == "Distance3"
    assert document["passed"] is True
    assert document["sum"] == pytest.approx(2 * (2 - math.sqrt(2)), abs=1e-12)


def test_audit_edge_list_from_file(tmp_path, capsys):
    path = tmp_path / "c6.txt"
    path.write_text(emit_edge_list(cycle_graph(6)))
    assert cli.run(["audit", str(path), "--format", "edges"]) == 0
    assert "pass" in capsys.readouterr().out


def test_audit_output_independent_of_threads(mixed_file, capsys):
    assert cli.run(["audit", mixed_file, "--json", "-"]) == 0
    single = capsys.readouterr().out
    assert cli.run(["--threads", "2", "audit", mixed_file, "--json", "-"]) == 0
    pooled = capsys.readouterr().out
    assert single == pooled
    assert cli.run(["audit", mixed_file, "--threads", "2", "--json", "-"]) == 0
    assert capsys.readouterr().out == single


def test_audit_failure_exit_code(p4_file, monkeypatch, capsys):
    def failing_audit(G, tolerances):
        certificate = audit_graph(G, tolerances)
        return replace(certificate, checks=certificate.checks + [Check.holds("forced", False)])

    monkeypatch.setattr(cli, "audit_graph", failing_audit)
    assert cli.run(["audit", p4_file]) == 1
    assert "fail" in capsys.readouterr().out


def test_enumerate_order_four(tmp_path, capsys):
    equality_out = tmp_path / "eq.g6"
    report_out = tmp_path / "enum.json"
    argv = ["enumerate", "--order", "4", "--equality-out", str(equality_out)]
    assert cli.run(argv + ["--json", str(report_out)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("11 graphs, 0 violations, c_4 = ")
    report = json.loads(report_out.read_text())
    assert report["count"] == 11
    assert report["c_n"] == pytest.approx(2 - math.sqrt(2), abs=1e-8)
    assert len(equality_out.read_text().splitlines()) == len(report["equality_cases"]) == 4


def test_enumerate_output_independent_of_threads(capsys):
    assert cli.run(["enumerate", "--order", "5", "--json", "-"]) == 0
    single = capsys.readouterr().out
    assert cli.run(["enumerate", "--order", "5", "--threads", "2", "--json", "-"]) == 0
    assert capsys.readouterr().out == single


def test_enumerate_needs_long_switch():
    assert cli.run(["enumerate", "--order", "9"]) == 2


def test_spectrum_csv(p4_file, capsys):
    assert cli.run(["spectrum", p4_file]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "index,eigenvalue"
    values = [float(line.split(",")[1]) for line in lines[1:]]
    expected = [2 - 2 * math.cos(k * math.pi / 4) for k in range(4)]
    assert values == pytest.approx(expected, abs=1e-12)


def test_spectrum_jacobi(p4_file, capsys):
    assert cli.run(["spectrum", p4_file, "--method", "jacobi"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "index,eigenvalue"


def test_resistance_pair(p4_file, capsys):
    assert cli.run(["resistance", p4_file, "--pair", "0,3"]) == 0
    out = capsys.readouterr().out
    value = float(out.splitlines()[0].split("=")[1])
    assert value == pytest.approx(3.0, abs=1e-12)
    assert "kirchhoff_index" in out


@pytest.mark.parametrize("pair", ["0,5", "-1,2", "4,0"])
def test_resistance_pair_out_of_range(p4_file, pair, capsys):
    assert cli.run(["resistance", p4_file, f"--pair={pair}"]) == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "Traceback" not in captured.err


def test_json_on_stdout_is_the_only_stdout(p4_file, capsys):
    assert cli.run(["audit", p4_file, "--json", "-"]) == 0
    captured = capsys.readouterr()
    assert json.loads(captured.out)[0]["case"] == "Distance3"
    assert "1.171572875" in captured.err

    assert cli.run(["enumerate", "--order", "4", "--json", "-"]) == 0
    captured = capsys.readouterr()
    assert json.loads(captured.out)["count"] == 11
    assert "11 graphs, 0 violations" in captured.err

    argv = ["family", "--name", "remark", "--order", "8", "--audit", "--json", "-"]
    assert cli.run(argv) == 0
    assert json.loads(capsys.readouterr().out)[0]["input"]["n"] == 8

    assert cli.run(["random", "--count", "5", "--max-order", "8", "--json", "-"]) == 0
    assert json.loads(capsys.readouterr().out)["count"] == 5


def test_family_remark(capsys):
    assert cli.run(["family", "--name", "remark", "--order", "10", "--audit"]) == 0
    out = capsys.readouterr().out
    assert "(< 1)" in out
    assert "closed_form = " in out


def test_family_json(tmp_path):
    target = tmp_path / "star.json"
    argv = ["family", "--name", "star", "--order", "6", "--audit", "--json", str(target)]
    assert cli.run(argv) == 0
    document = json.loads(target.read_text())[0]
    assert document["input"]["format"] == "family"
    assert document["equality"]["flag"] is True


def test_random_is_seeded(capsys):
    assert cli.run(["--seed", "5", "random", "--count", "20", "--max-order", "16"]) == 0
    first = capsys.readouterr().out
    assert cli.run(["random", "--count", "20", "--max-order", "16", "--seed", "5"]) == 0
    assert capsys.readouterr().out == first
    assert "20 graphs, 0 failures" in first


@pytest.mark.parametrize(
    "argv",
    [
        ["audit"],
        ["audit", "x.g6", "--no-such-flag"],
        ["--tol", "-1", "audit", "x.g6"],
        ["resistance", "x.g6", "--pair", "zero"],
        ["family", "--name", "petersen", "--order", "10"],
    ],
)
def test_usage_errors(argv):
    assert cli.run(argv) == 2


def test_input_errors(tmp_path):
    assert cli.run(["audit", str(tmp_path / "missing.g6")]) == 2
    bad = tmp_path / "bad.g6"
    bad.write_text("C!\n")
    assert cli.run(["audit", str(bad)]) == 2
    empty = tmp_path / "empty.g6"
    empty.write_text("\n")
    assert cli.run(["audit", str(empty)]) == 2
    assert cli.run(["family", "--name", "cycle", "--order", "2"]) == 2


def test_version(capsys):
    assert cli.run(["--version"]) == 0
    assert capsys.readouterr().out.startswith("spreadcheck ")
