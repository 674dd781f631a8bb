"""
Distance-3 branch: partition, closed-form bounds and the complement-side
inequality chain.

With the extremes v1, v2 at distance 3 and a maximum system of s disjoint
paths v1 - u - w - v2, the vertex set splits into
    S2 = path vertices adjacent to v1, S1 = path vertices adjacent to v2,
    A = N(v1) \\ S, B = N(v2) \\ S, C = the rest,
labelled so that |A| <= |B|. l is the largest number of A-neighbours of a
vertex of S1 or of B-neighbours of a vertex of S2.
"""

import logging
from typing import Dict, List, Tuple

import numpy as np

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..exceptions import CertificateError, PreconditionError
from ..graphs.core import Graph, bits_of, complement, distance, is_connected, mask_of
from ..graphs.families import star_graph
from ..spectra.laplacian import FiedlerData, algebraic_connectivity, edge_energy, pair_energy
from ..spectra.resistance import conductance_lower_bound
from .base import CaseData, Check, DeepCheckReport, StarSubgraph
from .paths import disjoint_length3_paths

logger = logging.getLogger(__name__)


def orient(
    G: Graph, f: FiedlerData, fbar: FiedlerData
) -> Tuple[Graph, FiedlerData, FiedlerData, bool]:
    """
    Put the graph whose Fiedler vector has the larger spread first.

    Returns:
        (graph carrying x, x data, y data, swapped)
    """
    if fbar.gap > f.gap:
        return complement(G), fbar, f, True
    return G, f, fbar, False


def build_case_data(
    G: Graph,
    f: FiedlerData,
    fbar: FiedlerData,
    orient_pair: bool = True,
) -> CaseData:
    """
    Partition data for the distance-3 branch.

    Args:
        G: Graph (connected, with connected complement)
        f: Fiedler data of G
        fbar: Fiedler data of the complement
        orient_pair: Swap G and its complement first when the complement's
            vector has the larger spread

    Raises:
        PreconditionError: Disconnected side or extreme distance other than 3
        CertificateError: An edge between A + {v1} and B + {v2}
    """
    swapped = False
    if orient_pair:
        G, f, fbar, swapped = orient(G, f, fbar)
    if not is_connected(G) or not is_connected(complement(G)):
        raise PreconditionError("Case data needs the graph and its complement connected")
    v1, v2 = f.v1, f.v2
    d = distance(G, v1, v2)
    if d != 3:
        raise PreconditionError(f"Case data needs extreme distance 3, got {d}")

    paths = disjoint_length3_paths(G, v1, v2)
    matching = paths.matching
    S2 = tuple(sorted(u for u, _ in matching))
    S1 = tuple(sorted(w for _, w in matching))
    on_paths = mask_of(S1 + S2 + (v1, v2))
    A = tuple(bits_of(G.rows[v1] & ~on_paths))
    B = tuple(bits_of(G.rows[v2] & ~on_paths))
    C = tuple(bits_of(((1 << G.n) - 1) & ~on_paths & ~mask_of(A + B)))

    relabelled = len(A) > len(B)
    if relabelled:
        v1, v2 = v2, v1
        A, B = B, A
        S1, S2 = S2, S1
        matching = tuple(sorted((w, u) for u, w in matching))

    left = mask_of(A + (v1,))
    right = mask_of(B + (v2,))
    crossing = [v for v in bits_of(left) if G.rows[v] & right]
    if crossing:
        raise CertificateError(
            f"Edges between A+v1 and B+v2 at vertices {crossing}; path system is not maximum"
        )

    mask_A, mask_B = mask_of(A), mask_of(B)
    l = max(
        [(G.rows[v] & mask_A).bit_count() for v in S1]
        + [(G.rows[u] & mask_B).bit_count() for u in S2]
    )
    return CaseData(
        graph=G,
        swapped=swapped,
        v1=v1,
        v2=v2,
        gap=f.gap,
        distance=int(d),
        s=paths.s,
        matching=matching,
        S1=S1,
        S2=S2,
        A=A,
        B=B,
        C=C,
        l=l,
        relabelled=relabelled,
    )


def _check_parameters(n: int, s: int, l: int) -> None:
    if n < 2 or s < 1 or l < 0:
        raise PreconditionError(f"Bound needs n >= 2, s >= 1, l >= 0, got ({n}, {s}, {l})")


def eq8_bound(n: int, s: int, l: int) -> float:
    """Complement bound n / (n + 2 + 3s^2 + 6sl)."""
    _check_parameters(n, s, l)
    return n / (n + 2 + 3 * s * s + 6 * s * l)


def eq10_bound(n: int, s: int, l: int) -> float:
    """Sum bound: eq8_bound plus the conductance bound (s - 1)/3 + (l + 1)/(l + 3)."""
    return eq8_bound(n, s, l) + conductance_lower_bound(s, l)


def case_table_applies(n: int, s: int, l: int) -> bool:
    """Parameter ranges where eq10_bound alone already exceeds 1."""
    return (s == 1 and n >= 12) or (s == 2 and (n >= 10 or l >= 3))


def _sq(y: np.ndarray, i: int, j: int) -> float:
    return float((y[i] - y[j]) ** 2)


def _star(
    name: str,
    center: int,
    leaves: Tuple[int, ...],
    y: np.ndarray,
    complement_graph: Graph,
    tolerances: Tolerances,
    checks: List[Check],
) -> StarSubgraph:
    m = len(leaves) + 1
    in_complement = all(complement_graph.has_edge(center, leaf) for leaf in leaves)
    checks.append(Check.holds(f"step22.{name}.edges_in_complement", in_complement))
    lambda2 = algebraic_connectivity(star_graph(m), tolerances).lambda2
    checks.append(
        Check.at_least(f"step22.{name}.lambda", lambda2, 1.0, tolerances.audit, note=f"m = {m}")
    )
    energy = sum(_sq(y, center, leaf) for leaf in leaves)
    vertex_pairs = pair_energy(y[[center, *leaves]])
    checks.append(
        Check.at_least(f"step22.{name}.fiedler", m * energy, vertex_pairs, tolerances.audit)
    )
    return StarSubgraph(name, center, leaves, m, energy, lambda2)


def deep_check_step22(
    G: Graph,
    fbar: FiedlerData,
    cd: CaseData,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> DeepCheckReport:
    """
    Evaluate the complement-side chain on y, the Fiedler vector of the complement.

    Args:
        G: The oriented graph cd was built on (cd.graph)
        fbar: Fiedler data of complement(G)
        cd: Distance-3 case data

    Returns:
        DeepCheckReport with the star, pair-family, path-split and aggregate checks

    Raises:
        PreconditionError: If cd does not partition the vertices of G
    """
    n = G.n
    parts = (cd.A, cd.B, cd.C, cd.S1, cd.S2, (cd.v1, cd.v2))
    if sorted(v for part in parts for v in part) != list(range(n)):
        raise PreconditionError("Case data does not partition the vertex set")
    if fbar.n != n:
        raise PreconditionError(f"Fiedler vector length {fbar.n} does not match n = {n}")

    y = fbar.vector
    v1, v2, s, l = cd.v1, cd.v2, cd.s, cd.l
    a, b, c = cd.a, cd.b, cd.c
    tol = tolerances.audit
    Gc = complement(G)
    checks: List[Check] = [
        Check.holds("step22.partition.sizes", n == a + b + c + 2 * s + 2, note=f"n = {n}"),
        Check.holds("step22.partition.a_le_b", a <= b),
    ]

    stars = (
        _star("H1", v1, (v2, *cd.B, *cd.C, *cd.S1), y, Gc, tolerances, checks),
        _star("H2", v2, (*cd.A, *cd.C, *cd.S2), y, Gc, tolerances, checks),
        _star("H3", v2, (v1, *cd.A, *cd.S2), y, Gc, tolerances, checks),
    )
    for star, expected in zip(stars, (c + b + s + 2, c + a + s + 1, a + s + 2)):
        checks.append(Check.holds(f"step22.{star.name}.coefficient", star.coefficient == expected))

    # X: all pairs except A x B, S1 x S2, S1 x A, S2 x B
    excluded_masks = [
        (mask_of(cd.A), mask_of(cd.B)),
        (mask_of(cd.S1), mask_of(cd.S2)),
        (mask_of(cd.S1), mask_of(cd.A)),
        (mask_of(cd.S2), mask_of(cd.B)),
    ]

    def excluded(i: int, j: int) -> bool:
        for P, Q in excluded_masks:
            if (P >> i & 1 and Q >> j & 1) or (P >> j & 1 and Q >> i & 1):
                return True
        return False

    pair_family = tuple((i, j) for i in range(n) for j in range(i + 1, n) if not excluded(i, j))
    x_energy = sum(_sq(y, i, j) for i, j in pair_family)
    star_side = sum(star.coefficient * star.edge_energy for star in stars)
    checks.append(Check.at_least("step22.eq2", star_side, x_energy, tol))

    cross = sum(_sq(y, i, j) for i in cd.S1 for j in cd.S2)
    s1_to_v1 = sum(_sq(y, v1, i) for i in cd.S1)
    s2_to_v2 = sum(_sq(y, v2, j) for j in cd.S2)
    ends = _sq(y, v1, v2)
    checks.append(
        Check.at_most(
            "step22.eq3", cross, 3 * s * s1_to_v1 + 3 * s * s2_to_v2 + 3 * s * s * ends, tol
        )
    )

    A_sets: Dict[int, Tuple[int, ...]] = {
        v: tuple(bits_of(G.rows[v] & mask_of(cd.A))) for v in cd.S1
    }
    B_sets: Dict[int, Tuple[int, ...]] = {
        v: tuple(bits_of(G.rows[v] & mask_of(cd.B))) for v in cd.S2
    }
    largest = max([len(vs) for vs in A_sets.values()] + [len(vs) for vs in B_sets.values()])
    checks.append(Check.at_most("step22.Ai_Bi_size", largest, l, 0.0))

    a_side = sum(_sq(y, i, j) for i, js in A_sets.items() for j in js)
    a_bound = 3 * s * l * (s1_to_v1 + sum(_sq(y, v2, j) for j in cd.A) + ends)
    checks.append(Check.at_most("step22.eq4", a_side, a_bound, tol))

    b_side = sum(_sq(y, i, j) for i, js in B_sets.items() for j in js)
    b_bound = 3 * s * l * (s2_to_v2 + sum(_sq(y, v1, j) for j in cd.B) + ends)
    checks.append(Check.at_most("step22.eq5", b_side, b_bound, tol))

    # remaining A and B pairs must be complement edges, counted once
    trivial_pairs = [(i, j) for i, js in A_sets.items() for j in cd.A if j not in js]
    trivial_pairs += [(i, j) for i, js in B_sets.items() for j in cd.B if j not in js]
    trivial_pairs += [(i, j) for i in cd.A for j in cd.B]
    checks.append(
        Check.holds(
            "step22.eq6.complement_edges",
            all(Gc.has_edge(i, j) for i, j in trivial_pairs),
            note=f"{len(trivial_pairs)} pairs",
        )
    )

    K = n + 2 + 3 * s * s + 6 * s * l
    all_pairs = pair_energy(y)
    complement_edges = edge_energy(Gc, y)
    checks.append(Check.at_least("step22.aggregate", K * complement_edges, all_pairs, tol))

    M = max(cd.gap ** 2, fbar.gap ** 2)
    logger.debug(f"Deep check n={n} s={s} l={l}: aggregate {K * complement_edges - all_pairs:.3e}")
    return DeepCheckReport(stars, pair_family, A_sets, B_sets, M, checks)
