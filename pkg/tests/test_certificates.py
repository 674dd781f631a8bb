"""
Tests for the lemma checks, the path system, the distance-3 case data and the
certificate audits.
"""

import math

import networkx as nx
import numpy as np
import pytest

from conftest import connected_graphs_up_to, graphs_of_order
from spreadcheck.certificates.base import CaseTag, Check, CheckStatus
from spreadcheck.certificates.case_analysis import (
    build_case_data,
    case_table_applies,
    deep_check_step22,
    eq8_bound,
    eq10_bound,
)
from spreadcheck.certificates.lemmas import (
    is_join_of_cone_and_disconnected,
    lemma_diameter_check,
    lemma_disconnected_check,
    lemma_identity_check,
    neighbor_bound_check,
    step1_bound,
)
from spreadcheck.certificates.paths import (
    BipartiteGraph,
    HopcroftKarp,
    disjoint_length3_paths,
    max_disjoint_length3_paths_bruteforce,
)
from spreadcheck.certificates.theorems import (
    PairAnalysis,
    audit_graph,
    audit_theorem1,
    audit_theorem2,
    minmax_report,
    theorem2_floor,
)
from spreadcheck.config import PRIOR_MINMAX_CONSTANT
from spreadcheck.enumeration.generate import random_graph, random_graphs
from spreadcheck.exceptions import GraphError, PreconditionError
from spreadcheck.graphs.core import (
    build_graph,
    complement,
    disjoint_union,
    distance,
    empty_graph,
    is_connected,
)
from spreadcheck.graphs.families import FamilySpec, complete_graph, cycle_graph, make, star_graph
from spreadcheck.spectra.laplacian import algebraic_connectivity


def parallel_paths(s):
    edges = []
    for k in range(s):
        a, b = 2 + 2 * k, 3 + 2 * k
        edges += [(0, a), (a, b), (b, 1)]
    return build_graph(2 + 2 * s, edges)


def zero_sum(rng, n):
    z = rng.normal(size=n)
    return z - z.mean()


# --- Check records ---------------------------------------------------------------------


def test_check_constructors():
    ok = Check.at_least("a", 1.0, 0.5, 1e-7)
    assert ok.status is CheckStatus.PASS and ok.slack == 0.5
    bad = Check.at_most("b", 2.0, 1.0, 1e-7)
    assert bad.failed and bad.slack == -1.0
    within = Check.at_least("c", 1.0 - 1e-9, 1.0, 1e-7)
    assert not within.failed
    assert Check.holds("d", False).failed
    na = Check.not_applicable("e", note="why")
    assert na.status is CheckStatus.NOT_APPLICABLE and math.isnan(na.slack)
    assert ok.to_dict()["status"] == "pass"
    assert na.to_dict()["status"] == "not-applicable"


# --- lemmas ----------------------------------------------------------------------------


def test_identity_lemma_random_pairs():
    rng = np.random.default_rng(3)
    for _ in range(10_000):
        n = int(rng.integers(2, 21))
        result = lemma_identity_check(zero_sum(rng, n), zero_sum(rng, n))
        assert result.slack >= -1e-9
        assert result.expansion_error <= 1e-8


def test_identity_lemma_preconditions():
    with pytest.raises(PreconditionError):
        lemma_identity_check([1.0, 0.0], [1.0, -1.0])
    with pytest.raises(PreconditionError):
        lemma_identity_check([1.0, -1.0], [1.0, 0.0, -1.0])


def test_cone_join_examples(p4, paw):
    assert is_join_of_cone_and_disconnected(star_graph(5)) == (True, 0)
    assert is_join_of_cone_and_disconnected(paw) == (True, 1)
    assert not is_join_of_cone_and_disconnected(complete_graph(3)).holds
    assert not is_join_of_cone_and_disconnected(p4).holds
    with pytest.raises(PreconditionError):
        is_join_of_cone_and_disconnected(empty_graph(1))


def test_disconnected_lemma_examples(k2):
    k1_k2 = disjoint_union(empty_graph(1), k2)
    result = lemma_disconnected_check(k1_k2)
    assert result.lambda_complement == pytest.approx(1.0, abs=1e-9)
    assert result.equality and result.structural

    result = lemma_disconnected_check(disjoint_union(k2, k2))
    assert result.lambda_complement == pytest.approx(2.0, abs=1e-9)
    assert not result.equality and not result.structural

    with pytest.raises(PreconditionError):
        lemma_disconnected_check(k2)


@pytest.mark.parametrize("n", range(2, 8))
def test_disconnected_lemma_exhaustive(n):
    for G in graphs_of_order(n):
        if is_connected(G):
            continue
        result = lemma_disconnected_check(G)
        assert result.lambda_complement >= 1.0 - 1e-9
        assert result.equality == result.structural


def test_diameter_lemma_exhaustive():
    for G in connected_graphs_up_to(7):
        result = lemma_diameter_check(G)
        assert result.implication_holds
        assert result.corollary_holds
    with pytest.raises(GraphError):
        lemma_diameter_check(empty_graph(3))


def test_neighbor_bound_examples(k2, p4):
    # both ends of K2 satisfy the bound with equality
    assert neighbor_bound_check(k2, algebraic_connectivity(k2)) == pytest.approx(0.0, abs=1e-12)
    # a pendant extreme is tight too: its eigen equation reads x_1 = (1 - lambda) x_0
    slack = neighbor_bound_check(p4, algebraic_connectivity(p4))
    assert slack >= -1e-9
    assert slack == pytest.approx(0.0, abs=1e-9)
    remark = make(FamilySpec("remark", 6))
    assert neighbor_bound_check(remark, algebraic_connectivity(remark)) >= -1e-9


def test_neighbor_bound_exhaustive():
    for G in connected_graphs_up_to(7):
        assert neighbor_bound_check(G, algebraic_connectivity(G)) >= -1e-9


def test_step1_chain_on_connected_pairs():
    for G in connected_graphs_up_to(6):
        Gc = complement(G)
        if not is_connected(Gc):
            continue
        x, y = algebraic_connectivity(G), algebraic_connectivity(Gc)
        chain = step1_bound(x, y)
        assert x.lambda2 + y.lambda2 >= chain.minsum - 1e-9
        assert chain.minsum >= chain.weighted - 1e-9
        assert chain.weighted >= chain.bound - 1e-9
        assert chain.M == pytest.approx(max(x.gap, y.gap) ** 2)


# --- path systems ----------------------------------------------------------------------


@pytest.mark.parametrize("s", range(1, 6))
def test_parallel_paths_count(s):
    system = disjoint_length3_paths(parallel_paths(s), 0, 1)
    assert system.s == s
    assert len({u for u, _ in system.matching} | {w for _, w in system.matching}) == 2 * s


def test_path_system_requires_distance_three(p4):
    with pytest.raises(PreconditionError):
        disjoint_length3_paths(p4, 0, 2)


def test_matching_matches_bruteforce_on_fiedler_extremes():
    compared = 0
    for G in connected_graphs_up_to(7):
        f = algebraic_connectivity(G)
        if distance(G, f.v1, f.v2) != 3:
            continue
        expected = max_disjoint_length3_paths_bruteforce(G, f.v1, f.v2)
        assert disjoint_length3_paths(G, f.v1, f.v2).s == expected
        compared += 1
    assert compared > 0


def test_matching_matches_bruteforce_on_all_distance3_pairs():
    for G in connected_graphs_up_to(6):
        for u in range(G.n):
            for v in range(u + 1, G.n):
                if distance(G, u, v) == 3:
                    expected = max_disjoint_length3_paths_bruteforce(G, u, v)
                    assert disjoint_length3_paths(G, u, v).s == expected


def test_hopcroft_karp_matches_networkx():
    rng = np.random.default_rng(5)
    for _ in range(50):
        nu, nv = int(rng.integers(1, 9)), int(rng.integers(1, 9))
        edges = [(u, v) for u in range(nu) for v in range(nv) if rng.random() < 0.3]
        matching = HopcroftKarp(BipartiteGraph(nu, nv, edges))()
        assert len({u for u, _ in matching}) == len({v for _, v in matching}) == len(matching)
        assert all((u, v) in edges for u, v in matching)

        B = nx.Graph()
        B.add_nodes_from(("u", u) for u in range(nu))
        B.add_nodes_from(("v", v) for v in range(nv))
        B.add_edges_from((("u", u), ("v", v)) for u, v in edges)
        top = [("u", u) for u in range(nu)]
        expected = len(nx.bipartite.hopcroft_karp_matching(B, top_nodes=top)) // 2
        assert len(matching) == expected


# --- distance-3 case data --------------------------------------------------------------


def test_case_data_on_p4(p4):
    f = algebraic_connectivity(p4)
    fbar = algebraic_connectivity(complement(p4))
    cd = build_case_data(p4, f, fbar)
    assert cd.distance == 3 and cd.s == 1 and cd.l == 0
    assert (cd.a, cd.b, cd.c) == (0, 0, 0)
    assert sorted(cd.S) == [0, 1, 2, 3]
    G = cd.graph
    y = fbar if not cd.swapped else f
    assert deep_check_step22(G, y, cd).passed


def test_case_data_on_c6():
    G = cycle_graph(6)
    f = algebraic_connectivity(G)
    fbar = algebraic_connectivity(complement(G))
    cd = build_case_data(G, f, fbar)
    assert not cd.swapped
    assert (cd.v2 - cd.v1) % 6 == 3 and cd.distance == 3
    assert cd.s == 2 and cd.l == 0
    assert cd.A == cd.B == cd.C == ()
    assert cd.S == tuple(range(6))
    report = deep_check_step22(G, fbar, cd)
    assert report.passed
    assert all(check.slack >= -1e-7 for check in report.checks)


def test_case_data_on_p4_with_interior_pendant():
    # 0-1-2-3 with the pendant 4 on vertex 1; leaves 0 and 4 are twins
    G = build_graph(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
    f = algebraic_connectivity(G)
    fbar = algebraic_connectivity(complement(G))
    assert {f.v1, f.v2} in ({0, 3}, {4, 3})

    cd = build_case_data(G, f, fbar, orient_pair=False)
    assert not cd.swapped and cd.distance == 3
    assert cd.s == 1 and cd.l == 0
    assert (cd.a, cd.b) == (0, 0)
    assert len(cd.C) == 1 and cd.C[0] in (0, 4)
    assert sorted(cd.S1 + cd.S2) == [1, 2]
    assert deep_check_step22(G, fbar, cd).passed

    # the complement vector has the larger spread, so the oriented data live on it
    oriented = build_case_data(G, f, fbar)
    assert oriented.swapped and oriented.distance == 3
    assert oriented.s == 1 and oriented.a <= oriented.b
    assert deep_check_step22(oriented.graph, f, oriented).passed


def test_case_data_partitions_vertices():
    for G in connected_graphs_up_to(7):
        analysis = PairAnalysis.of(G)
        if not analysis.complement_connected:
            continue
        Gx, x, _, _ = analysis.oriented()
        if distance(Gx, x.v1, x.v2) != 3:
            continue
        cd = analysis.case_data()
        parts = cd.A + cd.B + cd.C + cd.S1 + cd.S2 + (cd.v1, cd.v2)
        assert sorted(parts) == list(range(G.n))
        assert cd.a <= cd.b
        assert len(cd.S1) == len(cd.S2) == cd.s


def test_closed_form_bounds():
    assert eq8_bound(10, 1, 0) == pytest.approx(10 / 15)
    assert eq10_bound(10, 2, 2) == pytest.approx(10 / (10 + 2 + 12 + 24) + 14 / 15)
    assert eq8_bound(10, 2, 1) == pytest.approx(10 / 36)
    assert eq8_bound(10, 2, 0) == pytest.approx(10 / 24)
    assert eq10_bound(4, 1, 0) == pytest.approx(7 / 9)
    assert eq10_bound(10, 2, 0) == pytest.approx(2 / 3 + 10 / 24)
    assert all(eq10_bound(12, 1, l) > 1 for l in range(50))
    assert case_table_applies(12, 1, 0) and not case_table_applies(11, 1, 0)
    assert case_table_applies(10, 2, 0) and case_table_applies(8, 2, 3)
    assert not case_table_applies(9, 2, 2)
    for n, s, l in [(12, 1, 0), (20, 1, 5), (10, 2, 0), (6, 2, 3), (40, 2, 9)]:
        if case_table_applies(n, s, l):
            assert eq10_bound(n, s, l) > 1
    with pytest.raises(PreconditionError):
        eq8_bound(1, 1, 0)


# --- audits ----------------------------------------------------------------------------


def test_routing_examples(k2, p4):
    assert audit_theorem1(k2).case is CaseTag.TRIVIAL
    assert audit_theorem1(empty_graph(3)).case is CaseTag.DISCONNECTED
    assert audit_theorem1(complete_graph(3)).case is CaseTag.COMPLEMENT_DISCONNECTED
    assert audit_theorem1(cycle_graph(5)).case is CaseTag.LAMBDA_AT_LEAST_ONE

    certificate = audit_graph(p4)
    assert certificate.case is CaseTag.DISTANCE_3
    assert certificate.case_data.s == 1
    assert certificate.deep is not None and certificate.deep.passed
    assert certificate.total == pytest.approx(2 * (2 - math.sqrt(2)), abs=1e-9)
    assert certificate.passed

    with pytest.raises(PreconditionError):
        audit_theorem1(empty_graph(1))


def test_equality_examples():
    p3 = build_graph(3, [(0, 1), (0, 2)])
    certificate = audit_graph(p3)
    assert certificate.equality.flag and certificate.equality.structural
    assert certificate.equality.side == "original" and certificate.equality.vertex == 0

    certificate = audit_graph(complement(p3))
    assert certificate.equality.flag and certificate.equality.side == "complement"


@pytest.mark.parametrize("n", range(3, 33))
def test_star_equality_anchor(n):
    certificate = audit_graph(star_graph(n))
    assert certificate.lambda_g == pytest.approx(1.0, abs=1e-8)
    assert abs(certificate.lambda_complement) <= 1e-8
    assert certificate.total == pytest.approx(1.0, abs=1e-8)
    assert certificate.equality.flag and certificate.equality.structural
    assert certificate.passed


@pytest.mark.parametrize("n", range(2, 8))
def test_audits_pass_exhaustive(n):
    for G in graphs_of_order(n):
        certificate = audit_graph(G)
        assert certificate.passed, [c.name for c in certificate.failures()]
        assert certificate.total >= 1 - 1e-7
        assert certificate.equality.consistent


def _audit_random(count, seed):
    for G in random_graphs(count, 2, 32, seed=seed):
        certificate = audit_graph(G)
        assert certificate.passed, [c.name for c in certificate.failures()]


def test_audits_pass_random():
    _audit_random(150, seed=2024)


@pytest.mark.slow
def test_audits_pass_random_thousand():
    _audit_random(1000, seed=1)


def test_theorem2_reports():
    assert theorem2_floor(110 ** 3) == pytest.approx(0.0, abs=1e-12)
    assert theorem2_floor(8) < 0

    report = audit_theorem2(star_graph(5))
    assert not report.in_case and report.reason == "disconnected side"
    assert all(
        c.status is CheckStatus.NOT_APPLICABLE for c in report.checks if c.name != "theorem2.floor"
    )

    for n in range(4, 65):
        report = audit_theorem2(make(FamilySpec("remark", n)))
        assert report.max_lambda < 1
        assert report.passed


def test_theorem2_in_case_exhaustive():
    in_case = 0
    for G in connected_graphs_up_to(7):
        report = audit_theorem2(G)
        assert report.passed
        if report.in_case:
            in_case += 1
            assert report.s <= 5
    assert in_case > 0


def test_minmax_report():
    report = minmax_report(graphs_of_order(4))
    assert report.count == 11
    assert report.c_n == pytest.approx(2 - math.sqrt(2), abs=1e-8)
    for n in range(2, 8):
        assert minmax_report(graphs_of_order(n)).c_n >= PRIOR_MINMAX_CONSTANT
    with pytest.raises(PreconditionError):
        minmax_report([])
    with pytest.raises(PreconditionError):
        minmax_report([empty_graph(3), empty_graph(4)])


def test_certificate_to_dict(p4):
    data = audit_graph(p4).to_dict()
    assert data["case"] == "Distance3"
    assert data["case_data"]["s"] == 1
    assert data["case_data"]["distance"] == 3
    assert data["theorem2"]["in_case"] is True
    assert data["equality"] == {"flag": False, "structural": False, "witness": None}


def test_random_graph_certificates_deterministic():
    G = random_graph(12, 0.5, seed=9)
    assert audit_graph(G).to_dict() == audit_graph(G).to_dict()
