"""
Exhaustive generation of small graphs and the audits run over them.
"""

from .exhaustive import EnumReport, GraphAuditSummary, exhaustive_audit, ordered_map, summarize
from .generate import (
    RNG_ALGORITHM,
    check_order,
    count_graphs,
    enumerate_graphs,
    random_graph,
    random_graphs,
)

__all__ = [
    "EnumReport",
    "GraphAuditSummary",
    "RNG_ALGORITHM",
    "check_order",
    "count_graphs",
    "enumerate_graphs",
    "exhaustive_audit",
    "ordered_map",
    "random_graph",
    "random_graphs",
    "summarize",
]
