"""
Graph input formats and JSON report documents.
"""

from .documents import SCHEMA_VERSION, certificate_document, dumps, to_json_safe
from .edge_list import emit_edge_list, parse_edge_list, parse_edge_lists
from .graph6 import emit_graph6, parse_graph6, read_graph6_lines

__all__ = [
    "SCHEMA_VERSION",
    "certificate_document",
    "dumps",
    "emit_edge_list",
    "emit_graph6",
    "parse_edge_list",
    "parse_edge_lists",
    "parse_graph6",
    "read_graph6_lines",
    "to_json_safe",
]
