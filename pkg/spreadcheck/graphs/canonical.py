"""
Exact canonical codes for small graphs.

A graph's code is the upper triangle of its adjacency matrix read in graph6
column order ((0,1), (0,2), (1,2), (0,3), ...) as a most-significant-bit-first
integer. The canonical code is the minimum such integer over the leaves of an
individualization-refinement search tree. Refinement is equitable colour
refinement, and branches on twin vertices are skipped because swapping two
twins is an automorphism fixing the current partition.
"""

import itertools
from dataclasses import dataclass
from typing import List, Sequence

from ..config import MAX_CANONICAL_ORDER
from ..exceptions import GraphError
from .core import Graph, mask_of

Cells = List[List[int]]


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """
    Isomorphism-invariant code.

    Attributes:
        order: Number of vertices
        bits: Upper-triangle bit string of the canonically labelled graph
    """
    order: int
    bits: int

    def to_graph(self) -> Graph:
        """The canonically labelled representative encoded by this code."""
        n = self.order
        rows = [0] * n
        position = n * (n - 1) // 2 - 1
        for j in range(1, n):
            for i in range(j):
                if self.bits >> position & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                position -= 1
        return Graph(n, tuple(rows))

    def __str__(self) -> str:
        width = max(1, self.order * (self.order - 1) // 2)
        return f"{self.order}:{self.bits:0{width}b}"


def upper_triangle_code(rows: Sequence[int], order: Sequence[int]) -> int:
    """Code of the graph relabelled so that order[k] becomes vertex k."""
    code = 0
    n = len(order)
    for j in range(1, n):
        row_j = rows[order[j]]
        for i in range(j):
            code = code << 1 | (row_j >> order[i] & 1)
    return code


def _refine(rows: Sequence[int], cells: Cells) -> Cells:
    """Split cells by neighbour counts per cell until the partition is equitable."""
    while True:
        masks = [mask_of(cell) for cell in cells]
        refined: Cells = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict = {}
            for v in cell:
                signature = tuple((rows[v] & m).bit_count() for m in masks)
                groups.setdefault(signature, []).append(v)
            for signature in sorted(groups):
                refined.append(groups[signature])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _are_twins(rows: Sequence[int], u: int, v: int) -> bool:
    return rows[u] & ~(1 << v) == rows[v] & ~(1 << u)


def _search(rows: Sequence[int], cells: Cells, best: List[int]) -> None:
    target = next((k for k, cell in enumerate(cells) if len(cell) > 1), None)
    if target is None:
        code = upper_triangle_code(rows, [cell[0] for cell in cells])
        if best[0] < 0 or code < best[0]:
            best[0] = code
        return
    cell = cells[target]
    tried: List[int] = []
    for v in cell:
        if any(_are_twins(rows, u, v) for u in tried):
            continue
        tried.append(v)
        rest = [u for u in cell if u != v]
        child = cells[:target] + [[v], rest] + cells[target + 1:]
        _search(rows, _refine(rows, child), best)


def canonical_bits(n: int, rows: Sequence[int]) -> int:
    """Canonical code bits for raw adjacency rows (no Graph validation)."""
    if n > MAX_CANONICAL_ORDER:
        raise GraphError(
            f"Canonical labelling supports n <= {MAX_CANONICAL_ORDER}, got n = {n}"
        )
    if n <= 1:
        return 0
    by_degree: dict = {}
    for v in range(n):
        by_degree.setdefault(rows[v].bit_count(), []).append(v)
    cells = [by_degree[d] for d in sorted(by_degree)]
    best = [-1]
    _search(rows, _refine(rows, cells), best)
    return best[0]


def canonical_code(G: Graph) -> CanonicalCode:
    """
    Canonical code of G.

    Raises:
        GraphError: If G.n exceeds MAX_CANONICAL_ORDER
    """
    return CanonicalCode(G.n, canonical_bits(G.n, G.rows))


def canonical_form(G: Graph) -> Graph:
    """Canonically labelled copy of G; equal for isomorphic inputs."""
    return canonical_code(G).to_graph()


def are_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and G.num_edges == H.num_edges and canonical_code(G) == canonical_code(H)


def permutation_minimum_code(G: Graph) -> CanonicalCode:
    """Minimum code over all n! relabellings. Brute-force oracle, n <= 8."""
    if G.n > 8:
        raise GraphError(f"Permutation oracle is limited to n <= 8, got n = {G.n}")
    if G.n <= 1:
        return CanonicalCode(G.n, 0)
    orders = itertools.permutations(range(G.n))
    return CanonicalCode(G.n, min(upper_triangle_code(G.rows, order) for order in orders))

