"""
JSON documents written by the CLI.

Floats are emitted through json's repr-based encoder, which prints the
shortest string that round-trips the IEEE double (up to 17 significant
digits). NaN and infinities become null. Schema changes are additive;
SCHEMA_VERSION only changes when a field is removed or redefined.
"""

import json
import math
from typing import Any, Dict, Optional

import numpy as np

from ..certificates.base import Certificate
from ..config import MAX_CANONICAL_ORDER, Tolerances
from ..graphs.canonical import canonical_code
from ..graphs.core import Graph
from .graph6 import MAX_SHORT_ORDER, emit_graph6

SCHEMA_VERSION = "1"


def to_json_safe(value: Any) -> Any:
    """Recursively convert numpy scalars and tuples, mapping non-finite floats to None."""
    if isinstance(value, dict):
        return {str(k): to_json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json_safe(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def input_echo(G: Graph, source_format: str) -> Dict[str, Any]:
    return {
        "format": source_format,
        "n": G.n,
        "graph6": emit_graph6(G) if G.n <= MAX_SHORT_ORDER else None,
        "canonical_code": str(canonical_code(G)) if G.n <= MAX_CANONICAL_ORDER else None,
    }


def certificate_document(
    G: Graph,
    certificate: Certificate,
    source_format: str,
    tolerances: Tolerances,
    index: Optional[int] = None,
) -> Dict[str, Any]:
    """
    Certificate document for one input graph.

    Args:
        G: The graph as read
        certificate: audit_graph(G) result
        source_format: 'graph6' or 'edges'
        tolerances: Tolerances used for the audit
        index: Position of the graph in its input file

    Returns:
        JSON-ready dict
    """
    document: Dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "input": input_echo(G, source_format),
    }
    if index is not None:
        document["input"]["index"] = index
    document.update(certificate.to_dict())
    document["tolerance"] = tolerances.audit
    document["passed"] = certificate.passed
    return to_json_safe(document)


def dumps(document: Any) -> str:
    """Deterministic JSON text: fixed key order, two-space indent, no NaN tokens."""
    return json.dumps(to_json_safe(document), indent=2, allow_nan=False)
