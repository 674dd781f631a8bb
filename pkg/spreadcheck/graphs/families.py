"""
Named graph families and registry.

Provides centralized access to the standard constructors (path, cycle,
complete, star, empty) and the extremal "remark" family: K_{n-2} on vertices
2..n-1 plus the pendant edges (0, 2) and (1, 3). Its two complementary
Laplacians share lambda_2 = (n - sqrt(n^2 - 4n + 8)) / 2 < 1.
"""

import math
from dataclasses import dataclass
from typing import Callable, Dict, List

from ..exceptions import PreconditionError
from .core import Graph, build_graph, empty_graph


@dataclass(frozen=True)
class FamilySpec:
    """
    A family member request.

    Attributes:
        name: Family name, one of FAMILY_REGISTRY's keys
        n: Order of the requested graph
    """
    name: str
    n: int

    def validate(self) -> None:
        entry = get_family(self.name)
        if self.n < entry.min_order:
            raise PreconditionError(
                f"Family '{self.name}' requires n >= {entry.min_order}, got n = {self.n}"
            )


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << i) for i in range(n)))


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with center 0."""
    return build_graph(n, [(0, i) for i in range(1, n)])


def remark_graph(n: int) -> Graph:
    """Vertices 0 and 1 hang off 2 and 3 of a clique on 2..n-1."""
    edges = [(i, j) for i in range(2, n) for j in range(i + 1, n)]
    edges += [(0, 2), (1, 3)]
    return build_graph(n, edges)


@dataclass(frozen=True)
class FamilyEntry:
    build: Callable[[int], Graph]
    min_order: int
    description: str


FAMILY_REGISTRY: Dict[str, FamilyEntry] = {
    "path": FamilyEntry(path_graph, 1, "Path P_n"),
    "cycle": FamilyEntry(cycle_graph, 3, "Cycle C_n"),
    "complete": FamilyEntry(complete_graph, 1, "Complete graph K_n"),
    "star": FamilyEntry(star_graph, 2, "Star K_{1,n-1}, center 0"),
    "empty": FamilyEntry(empty_graph, 0, "Edgeless graph on n vertices"),
    "remark": FamilyEntry(
        remark_graph, 4, "K_{n-2} on 2..n-1 plus edges (0,2), (1,3); max{lambda, lambda-bar} < 1"
    ),
}


def get_family(name: str) -> FamilyEntry:
    """
    Look up a family by name.

    Raises:
        ValueError: If the name is not registered
    """
    if name not in FAMILY_REGISTRY:
        available = ", ".join(FAMILY_REGISTRY.keys())
        raise ValueError(f"Unknown family: {name}. Available families: {available}")
    return FAMILY_REGISTRY[name]


def list_families() -> List[Dict[str, object]]:
    return [
        {"name": name, "min_order": entry.min_order, "description": entry.description}
        for name, entry in FAMILY_REGISTRY.items()
    ]


def make(spec: FamilySpec) -> Graph:
    """
    Construct the graph described by spec.

    Raises:
        ValueError: Unknown family name
        PreconditionError: Order below the family's minimum
    """
    spec.validate()
    return get_family(spec.name).build(spec.n)


def remark_lambda(n: int) -> float:
    """Closed-form lambda_2 of remark_graph(n) and of its complement."""
    if n < 4:
        raise PreconditionError(f"Remark family requires n >= 4, got n = {n}")
    # (n - r) / 2 rewritten as (2n - 4) / (n + r) to avoid cancellation
    return (2 * n - 4) / (n + math.sqrt(n * n - 4 * n + 8))
