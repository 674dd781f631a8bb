"""
Internally disjoint length-3 paths between the Fiedler extremes.

When d(v1, v2) = 3 the two neighbourhoods are disjoint and every length-3 path
has the shape v1 - u - w - v2 with u in N(v1) and w in N(v2), so the maximum
number of internally disjoint such paths is a maximum bipartite matching
between N(v1) and N(v2) over the edges of G. Hopcroft-Karp with sorted
adjacency and sorted BFS roots makes the returned matching deterministic.
"""

from collections import deque
from typing import Dict, List, NamedTuple, Sequence, Tuple

from ..exceptions import PreconditionError
from ..graphs.core import Graph, distance

NIL = -1


class BipartiteGraph:
    """
    Bipartite graph ((U, V), E) with U and V indexed 0, 1, ...

    Adjacency lists are kept sorted.
    """

    def __init__(self, num_u: int, num_v: int, edges: Sequence[Tuple[int, int]]):
        if num_u < 0 or num_v < 0:
            raise ValueError(f"Side sizes must be non-negative, got ({num_u}, {num_v})")
        self.num_u = num_u
        self.num_v = num_v
        adj: List[set] = [set() for _ in range(num_u)]
        for u, v in edges:
            if not (0 <= u < num_u and 0 <= v < num_v):
                raise ValueError(f"Edge ({u}, {v}) outside sides ({num_u}, {num_v})")
            adj[u].add(v)
        self.adj_u: List[List[int]] = [sorted(vs) for vs in adj]


class HopcroftKarp:
    """Maximum-cardinality matching by shortest augmenting paths in phases."""

    def __init__(self, graph: BipartiteGraph):
        self.graph = graph
        self.match_u: List[int] = [NIL] * graph.num_u
        self.match_v: List[int] = [NIL] * graph.num_v
        self.dist: Dict[int, float] = {}

    def _layer(self) -> bool:
        """BFS from free U vertices; True if some free V vertex is reachable."""
        queue = deque()
        for u in range(self.graph.num_u):
            if self.match_u[u] == NIL:
                self.dist[u] = 0
                queue.append(u)
            else:
                self.dist[u] = float("inf")
        self.dist[NIL] = float("inf")
        while queue:
            u = queue.popleft()
            if self.dist[u] < self.dist[NIL]:
                for v in self.graph.adj_u[u]:
                    partner = self.match_v[v]
                    if self.dist[partner] == float("inf"):
                        self.dist[partner] = self.dist[u] + 1
                        if partner != NIL:
                            queue.append(partner)
        return self.dist[NIL] != float("inf")

    def _augment(self, u: int) -> bool:
        if u == NIL:
            return True
        for v in self.graph.adj_u[u]:
            partner = self.match_v[v]
            if self.dist[partner] == self.dist[u] + 1 and self._augment(partner):
                self.match_v[v] = u
                self.match_u[u] = v
                return True
        self.dist[u] = float("inf")
        return False

    def __call__(self) -> List[Tuple[int, int]]:
        self.match_u = [NIL] * self.graph.num_u
        self.match_v = [NIL] * self.graph.num_v
        self.dist = {}
        while self._layer():
            for u in range(self.graph.num_u):
                if self.match_u[u] == NIL:
                    self._augment(u)
        return [(u, v) for u, v in enumerate(self.match_u) if v != NIL]


class PathSystem(NamedTuple):
    s: int
    matching: Tuple[Tuple[int, int], ...]


def disjoint_length3_paths(G: Graph, v1: int, v2: int) -> PathSystem:
    """
    Maximum family of internally disjoint paths v1 - u - w - v2.

    Returns:
        PathSystem(s, matching) with matching pairs (u, w), u in N(v1), w in N(v2),
        sorted by u

    Raises:
        PreconditionError: If d(v1, v2) != 3
    """
    d = distance(G, v1, v2)
    if d != 3:
        raise PreconditionError(f"Length-3 path system needs d(v1, v2) = 3, got {d}")
    left = G.neighbors(v1)
    right = G.neighbors(v2)
    right_index = {w: k for k, w in enumerate(right)}
    edges = [
        (i, right_index[w])
        for i, u in enumerate(left)
        for w in G.neighbors(u)
        if w in right_index
    ]
    pairs = HopcroftKarp(BipartiteGraph(len(left), len(right), edges))()
    matching = tuple(sorted((left[i], right[k]) for i, k in pairs))
    return PathSystem(len(matching), matching)


def length3_paths(G: Graph, v1: int, v2: int) -> List[Tuple[int, int]]:
    """All (u, w) with v1 - u - w - v2 a path on four distinct vertices."""
    ends = {v1, v2}
    return [
        (u, w)
        for u in G.neighbors(v1)
        if u not in ends
        for w in G.neighbors(u)
        if w not in ends and G.has_edge(w, v2)
    ]


def max_disjoint_length3_paths_bruteforce(G: Graph, v1: int, v2: int) -> int:
    """Exhaustive packing of internally disjoint length-3 paths. Test oracle."""
    paths = length3_paths(G, v1, v2)

    def best(start: int, used: int) -> int:
        result = 0
        for k in range(start, len(paths)):
            u, w = paths[k]
            inner = (1 << u) | (1 << w)
            if not used & inner:
                result = max(result, 1 + best(k + 1, used | inner))
        return result

    return best(0, 0)
