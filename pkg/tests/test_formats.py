"""
Tests for graph6, edge lists and certificate documents.
"""

import json
import math

import networkx as nx
import numpy as np
import pytest

from conftest import graphs_of_order
from spreadcheck.certificates.theorems import audit_graph
from spreadcheck.config import DEFAULT_TOLERANCES
from spreadcheck.exceptions import FormatError
from spreadcheck.graphs.canonical import canonical_code
from spreadcheck.graphs.core import build_graph, empty_graph
from spreadcheck.graphs.families import complete_graph, path_graph
from spreadcheck.io.documents import SCHEMA_VERSION, certificate_document, dumps, to_json_safe
from spreadcheck.io.edge_list import emit_edge_list, parse_edge_list, parse_edge_lists
from spreadcheck.io.graph6 import emit_graph6, parse_graph6, read_graph6_lines


def test_graph6_examples(k2):
    assert parse_graph6("A_") == k2
    assert parse_graph6("C~") == complete_graph(4)
    assert parse_graph6("B?") == empty_graph(3)
    assert parse_graph6(">>graph6<<A_\n") == k2
    assert emit_graph6(k2) == "A_"
    assert emit_graph6(empty_graph(1)) == "@"


@pytest.mark.parametrize(
    "line",
    [
        "",  # empty
        "A",  # too short
        "A_?",  # too long
        "A ",  # character below 63
        "~?@",  # long form
        "A@",  # padding bit set
    ],
)
def test_graph6_rejects_malformed(line):
    with pytest.raises(FormatError):
        parse_graph6(line)


def test_graph6_line_numbers():
    with pytest.raises(FormatError, match="line 3"):
        list(read_graph6_lines(["A_", "", "A@"]))


def test_graph6_order_limit():
    G = path_graph(62)
    assert parse_graph6(emit_graph6(G)) == G
    with pytest.raises(FormatError):
        emit_graph6(empty_graph(63))


@pytest.mark.parametrize("n", range(1, 8))
def test_graph6_round_trip(n):
    for G in graphs_of_order(n):
        line = emit_graph6(G)
        assert parse_graph6(line) == G
        assert emit_graph6(parse_graph6(line)) == line


@pytest.mark.slow
def test_graph6_round_trip_order8():
    graphs = graphs_of_order(8)
    assert len(graphs) == 12346
    for G in graphs:
        line = emit_graph6(G)
        assert emit_graph6(parse_graph6(line)) == line


def test_graph6_matches_networkx():
    for G in graphs_of_order(5):
        H = nx.Graph()
        H.add_nodes_from(range(G.n))
        H.add_edges_from(G.edges())
        assert nx.to_graph6_bytes(H, header=False).strip().decode() == emit_graph6(G)


def test_edge_list_examples(k2, p4):
    assert parse_edge_list("2 1\n0 1") == k2
    assert parse_edge_list("4 3\n0 1\n1 2\n2 3") == p4
    assert parse_edge_list("3 0") == empty_graph(3)
    assert parse_edge_list(emit_edge_list(p4)) == p4


def test_edge_list_blocks_and_comments(k2, p4):
    text = "# two graphs\n2 1\n0 1\n\n4 3\n0 1\n1 2\n2 3\n"
    assert parse_edge_lists(text) == [k2, p4]
    with pytest.raises(FormatError):
        parse_edge_list(text)


@pytest.mark.parametrize(
    "text, message",
    [
        ("2 1\n0 2", "block at line 1"),
        ("2 1\n0 x", "line 2"),
        ("3 2\n0 1", "announces 2 edges"),
        ("3\n", "line 1"),
        ("2 1\n1 1", "block at line 1"),
    ],
)
def test_edge_list_rejects_malformed(text, message):
    with pytest.raises(FormatError, match=message):
        parse_edge_list(text)


def test_to_json_safe():
    value = {"a": np.float64(1.5), "b": math.nan, "c": (np.int64(2), math.inf), "d": np.bool_(True)}
    assert to_json_safe(value) == {"a": 1.5, "b": None, "c": [2, None], "d": True}


def test_certificate_document(p4):
    certificate = audit_graph(p4)
    document = certificate_document(p4, certificate, "graph6", DEFAULT_TOLERANCES, index=0)
    assert document["schema_version"] == SCHEMA_VERSION == "1"
    assert document["input"] == {
        "format": "graph6",
        "n": 4,
        "graph6": emit_graph6(p4),
        "canonical_code": str(canonical_code(p4)),
        "index": 0,
    }
    assert document["passed"] is True
    assert document["sum"] == pytest.approx(2 * (2 - math.sqrt(2)), abs=1e-9)
    statuses = {check["status"] for check in document["checks"]}
    assert statuses <= {"pass", "not-applicable"}
    assert all(
        set(check) >= {"name", "bound", "measured", "slack", "status"}
        for check in document["checks"]
    )

    text = dumps(document)
    assert "NaN" not in text
    assert json.loads(text) == document


def test_floats_keep_full_precision():
    value = 2 - math.sqrt(2)
    assert float(json.loads(dumps({"x": value}))["x"]) == value


def test_documents_are_deterministic():
    G = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 3)])
    first = dumps(certificate_document(G, audit_graph(G), "edges", DEFAULT_TOLERANCES))
    second = dumps(certificate_document(G, audit_graph(G), "edges", DEFAULT_TOLERANCES))
    assert first == second
