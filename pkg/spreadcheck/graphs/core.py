"""
Simple undirected graphs with bit-packed adjacency rows.

Row i is an int whose bit j is set iff i and j are adjacent. Graphs are
immutable; every construction returns a new Graph.
"""

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from ..exceptions import GraphError


@dataclass(frozen=True)
class Graph:
    """
    Simple graph on vertices 0..n-1.

    Attributes:
        n: Number of vertices (0 and 1 allowed)
        rows: Adjacency bit-rows, one int per vertex
    """
    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"Graph order must be non-negative, got {self.n}")
        if len(self.rows) != self.n:
            raise GraphError(f"Expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"Row {i} has bits outside range [0, {self.n})")
            if row >> i & 1:
                raise GraphError(f"Self-loop at vertex {i}")
            for j in _bits(row):
                if not self.rows[j] >> i & 1:
                    raise GraphError(f"Adjacency not symmetric at ({i}, {j})")

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def degrees(self) -> Tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def degree(self, v: int) -> int:
        return self.rows[self._check_vertex(v)].bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[self._check_vertex(i)] >> self._check_vertex(j) & 1)

    def neighbors(self, v: int) -> List[int]:
        """Neighbors of v in increasing order."""
        return list(_bits(self.rows[self._check_vertex(v)]))

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges (i, j) with i < j in row-major order."""
        for i, row in enumerate(self.rows):
            for j in _bits(row >> (i + 1)):
                yield i, i + 1 + j

    def adjacency_matrix(self) -> np.ndarray:
        A = np.zeros((self.n, self.n))
        for i, j in self.edges():
            A[i, j] = A[j, i] = 1.0
        return A

    def _check_vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise GraphError(f"Vertex {v} out of range [0, {self.n})")
        return v


def _bits(mask: int) -> Iterator[int]:
    """Indices of set bits, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(mask: int) -> List[int]:
    return list(_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    Build a graph from an edge list.

    Args:
        n: Number of vertices
        edges: Unordered index pairs; duplicates collapse to one edge

    Returns:
        Graph with exactly the given edges

    Raises:
        GraphError: If an index is out of range or a pair is a self-loop
    """
    if n < 0:
        raise GraphError(f"Graph order must be non-negative, got {n}")
    rows = [0] * n
    for pair in edges:
        i, j = pair
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"Edge ({i}, {j}) has an index outside [0, {n})")
        if i == j:
            raise GraphError(f"Self-loop ({i}, {j}) is not allowed in a simple graph")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph(G.n, tuple(~row & full & ~(1 << i) for i, row in enumerate(G.rows)))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """G on vertices 0..G.n-1 followed by H shifted by G.n; no cross edges."""
    return Graph(G.n + H.n, G.rows + tuple(row << G.n for row in H.rows))


def join(G: Graph, H: Graph) -> Graph:
    """Disjoint union plus every edge between the two blocks."""
    g_block = (1 << G.n) - 1
    h_block = ((1 << H.n) - 1) << G.n
    rows = tuple(row | h_block for row in G.rows) + tuple(
        (row << G.n) | g_block for row in H.rows
    )
    return Graph(G.n + H.n, rows)


def distances(G: Graph, v: int) -> List[float]:
    """
    BFS hop counts from v.

    Returns:
        List of length n; unreachable vertices are math.inf
    """
    G._check_vertex(v)
    dist: List[float] = [math.inf] * G.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in _bits(G.rows[u]):
            if dist[w] == math.inf:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(G: Graph, u: int, v: int) -> float:
    return distances(G, u)[G._check_vertex(v)]


def diameter(G: Graph) -> float:
    """Largest pairwise distance; math.inf iff G is disconnected. 0 for n <= 1."""
    best: float = 0
    for v in range(G.n):
        best = max(best, max(distances(G, v)))
        if best == math.inf:
            break
    return best


def connected_components(G: Graph) -> List[List[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    components = []
    for v in range(G.n):
        if seen >> v & 1:
            continue
        component = 1 << v
        frontier = 1 << v
        while frontier:
            reach = 0
            for u in _bits(frontier):
                reach |= G.rows[u]
            frontier = reach & ~component
            component |= frontier
        seen |= component
        components.append(bits_of(component))
    return components


def is_connected(G: Graph) -> bool:
    """True for n <= 1 (a single vertex is connected, the null graph vacuously)."""
    return len(connected_components(G)) <= 1


def induced_subgraph(G: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on the given vertices, relabelled 0..k-1 in the given order."""
    index = {v: k for k, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise GraphError("Induced subgraph vertices must be distinct")
    rows = []
    for v in vertices:
        G._check_vertex(v)
        rows.append(mask_of(index[w] for w in _bits(G.rows[v]) if w in index))
    return Graph(len(vertices), tuple(rows))


def remove_vertex(G: Graph, v: int) -> Graph:
    return induced_subgraph(G, [u for u in range(G.n) if u != G._check_vertex(v)])


def with_edge(G: Graph, i: int, j: int) -> Graph:
    """G plus the edge (i, j); the edge must be absent."""
    if i == j:
        raise GraphError(f"Self-loop ({i}, {j}) is not allowed in a simple graph")
    if G.has_edge(i, j):
        raise GraphError(f"Edge ({i}, {j}) already present")
    rows = list(G.rows)
    rows[i] |= 1 << j
    rows[j] |= 1 << i
    return Graph(G.n, tuple(rows))


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph in which old vertex v becomes perm[v]."""
    if sorted(perm) != list(range(G.n)):
        raise GraphError(f"Not a permutation of range({G.n}): {list(perm)}")
    rows = [0] * G.n
    for v, row in enumerate(G.rows):
        rows[perm[v]] = mask_of(perm[w] for w in _bits(row))
    return Graph(G.n, tuple(rows))


def degree_sequence(G: Graph) -> Tuple[int, ...]:
    """Degrees sorted in non-increasing order."""
    return tuple(sorted(G.degrees(), reverse=True))
