"""
Tests for effective resistance: spectral matrix, grounded-solve oracle and
the circuit rules.
"""

import numpy as np
import networkx as nx
import pytest

from conftest import connected_graphs_up_to
from spreadcheck.enumeration.generate import random_graph
from spreadcheck.exceptions import GraphError, PreconditionError
from spreadcheck.graphs.core import build_graph, disjoint_union, is_connected, with_edge
from spreadcheck.graphs.families import complete_graph, cycle_graph, path_graph
from spreadcheck.spectra.laplacian import algebraic_connectivity, edge_energy
from spreadcheck.spectra.resistance import (
    check_rayleigh_monotonicity,
    conductance_lower_bound,
    resistance_matrix,
    resistance_variational_oracle,
)


def parallel_paths(s):
    """s internally disjoint length-3 paths between vertices 0 and 1."""
    edges = []
    for k in range(s):
        a, b = 2 + 2 * k, 3 + 2 * k
        edges += [(0, a), (a, b), (b, 1)]
    return build_graph(2 + 2 * s, edges)


def test_resistance_examples(k2, p4):
    assert resistance_matrix(k2)[0, 1] == pytest.approx(1.0, abs=1e-10)
    assert resistance_matrix(p4)[0, 3] == pytest.approx(3.0, abs=1e-10)
    assert resistance_matrix(cycle_graph(6))[0, 3] == pytest.approx(1.5, abs=1e-10)
    R = resistance_matrix(complete_graph(5))
    off_diagonal = R.values[~np.eye(5, dtype=bool)]
    assert np.allclose(off_diagonal, 0.4, atol=1e-10)
    assert R.kirchhoff_index() == pytest.approx(4.0, abs=1e-9)


def test_oracle_examples(k2, p4, paw):
    assert resistance_variational_oracle(k2, 0, 1) == pytest.approx(1.0, abs=1e-12)
    assert resistance_variational_oracle(p4, 0, 3) == pytest.approx(3.0, abs=1e-12)
    # pendant edge in series with a triangle edge (2/3)
    oracle = resistance_variational_oracle(paw, 0, 2)
    assert oracle == pytest.approx(5.0 / 3.0, abs=1e-10)
    assert abs(oracle - resistance_matrix(paw)[0, 2]) <= 1e-10


def test_disconnected_inputs_rejected(k2):
    split = disjoint_union(k2, k2)
    with pytest.raises(GraphError):
        resistance_matrix(split)
    with pytest.raises(GraphError):
        resistance_variational_oracle(split, 0, 2)
    with pytest.raises(PreconditionError):
        resistance_variational_oracle(k2, 1, 1)


def test_pair_outside_vertex_range_rejected(p4):
    R = resistance_matrix(p4)
    for pair in [(0, 4), (4, 0), (-1, 2), (2, -1)]:
        with pytest.raises(GraphError):
            R[pair]
    with pytest.raises(GraphError):
        resistance_variational_oracle(p4, -1, 2)


def test_matrix_matches_oracle_exhaustive():
    for G in connected_graphs_up_to(7):
        R = resistance_matrix(G)
        for r in range(G.n):
            for s in range(r + 1, G.n):
                assert abs(R[r, s] - resistance_variational_oracle(G, r, s)) <= 1e-8


def test_matrix_matches_oracle_random():
    rng = np.random.default_rng(11)
    checked = 0
    while checked < 1000:
        n = int(rng.integers(2, 33))
        G = random_graph(n, float(rng.uniform(0.2, 0.9)), seed=int(rng.integers(1 << 31)))
        if not is_connected(G):
            continue
        R = resistance_matrix(G)
        r, s = (int(v) for v in rng.choice(n, size=2, replace=False))
        assert abs(R[r, s] - resistance_variational_oracle(G, r, s)) <= 1e-8
        checked += 1


def test_matrix_matches_networkx():
    for seed in range(5):
        G = random_graph(9, 0.5, seed=seed)
        if not is_connected(G):
            continue
        H = nx.Graph(list(G.edges()))
        R = resistance_matrix(G)
        assert R[0, 8] == pytest.approx(nx.resistance_distance(H, 0, 8), abs=1e-8)


def test_resistance_is_a_metric():
    for G in connected_graphs_up_to(6):
        R = resistance_matrix(G)
        assert np.allclose(R.values, R.values.T)
        assert np.all(R.values[~np.eye(G.n, dtype=bool)] > 0)
        assert R.triangle_violation() <= 1e-9


@pytest.mark.parametrize("k", range(1, 13))
def test_series_rule(k):
    assert resistance_matrix(path_graph(k + 1))[0, k] == pytest.approx(k, abs=1e-9)


@pytest.mark.parametrize("s", range(1, 7))
def test_parallel_rule(s):
    assert resistance_matrix(parallel_paths(s))[0, 1] == pytest.approx(3.0 / s, abs=1e-9)


def test_rayleigh_monotonicity_examples(p4):
    before = resistance_matrix(p4)[0, 3]
    after = resistance_matrix(with_edge(p4, 0, 2))[0, 3]
    assert after < before
    assert check_rayleigh_monotonicity(p4, (0, 2)) <= 1e-9

    closed = resistance_matrix(with_edge(p4, 0, 3))
    assert closed[0, 3] == pytest.approx(0.75, abs=1e-10)

    almost_complete = build_graph(5, [(i, j) for i in range(5) for j in range(i + 1, 5)][1:])
    assert check_rayleigh_monotonicity(almost_complete, (0, 1)) <= 1e-9

    with pytest.raises(PreconditionError):
        check_rayleigh_monotonicity(p4, (0, 1))


def test_rayleigh_monotonicity_exhaustive():
    for G in connected_graphs_up_to(5):
        for i in range(G.n):
            for j in range(i + 1, G.n):
                if not G.has_edge(i, j):
                    assert check_rayleigh_monotonicity(G, (i, j)) <= 1e-9


def test_conductance_lower_bound_examples():
    assert conductance_lower_bound(1, 0) == pytest.approx(1 / 3)
    assert conductance_lower_bound(2, 2) == pytest.approx(14 / 15)
    assert conductance_lower_bound(3, 0) == pytest.approx(1.0)
    with pytest.raises(PreconditionError):
        conductance_lower_bound(0, 0)


def test_energy_bounded_by_resistance():
    """lambda = edge_energy(x) >= (x_r - x_s)^2 / R(r, s) for every pair."""
    for G in connected_graphs_up_to(6):
        f = algebraic_connectivity(G)
        energy = edge_energy(G, f.vector)
        R = resistance_matrix(G)
        x = f.vector
        for r in range(G.n):
            for s in range(r + 1, G.n):
                assert energy >= (x[r] - x[s]) ** 2 / R[r, s] - 1e-9
