"""
Graph representation, constructions, canonical codes and named families.
"""

from .canonical import CanonicalCode, canonical_code, canonical_form, permutation_minimum_code
from .core import (
    Graph,
    build_graph,
    complement,
    connected_components,
    diameter,
    disjoint_union,
    distance,
    distances,
    empty_graph,
    induced_subgraph,
    is_connected,
    join,
    relabel,
    remove_vertex,
    with_edge,
)
from .families import FAMILY_REGISTRY, FamilySpec, get_family, list_families, make, remark_lambda

__all__ = [
    "Graph",
    "CanonicalCode",
    "FamilySpec",
    "FAMILY_REGISTRY",
    "build_graph",
    "canonical_code",
    "canonical_form",
    "complement",
    "connected_components",
    "diameter",
    "disjoint_union",
    "distance",
    "distances",
    "empty_graph",
    "get_family",
    "induced_subgraph",
    "is_connected",
    "join",
    "list_families",
    "make",
    "permutation_minimum_code",
    "relabel",
    "remark_lambda",
    "remove_vertex",
    "with_edge",
]
