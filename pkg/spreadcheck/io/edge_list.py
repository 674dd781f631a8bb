"""
Plain-text edge lists.

A block is a header line "n m" followed by m lines "i j" with 0-based indices.
A file may hold several blocks; blank lines and lines starting with '#' are
ignored.
"""

from typing import Iterator, List, Tuple

from ..exceptions import FormatError, GraphError
from ..graphs.core import Graph, build_graph


def _tokens(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield number, stripped.split()


def _integers(number: int, fields: List[str], expected: int) -> List[int]:
    if len(fields) != expected:
        raise FormatError(f"line {number}: expected {expected} integers, got {' '.join(fields)!r}")
    try:
        return [int(field) for field in fields]
    except ValueError:
        raise FormatError(f"line {number}: not an integer in {' '.join(fields)!r}") from None


def parse_edge_lists(text: str) -> List[Graph]:
    """
    Decode every block in text.

    Raises:
        FormatError: Malformed header or edge line, missing edges, bad indices
    """
    graphs = []
    lines = _tokens(text)
    for number, fields in lines:
        n, m = _integers(number, fields, 2)
        if n < 0 or m < 0:
            raise FormatError(f"line {number}: negative size in header '{n} {m}'")
        edges = []
        for _ in range(m):
            try:
                edge_number, edge_fields = next(lines)
            except StopIteration:
                raise FormatError(
                    f"line {number}: header announces {m} edges, found {len(edges)}"
                ) from None
            edges.append(tuple(_integers(edge_number, edge_fields, 2)))
        try:
            graphs.append(build_graph(n, edges))
        except GraphError as e:
            raise FormatError(f"block at line {number}: {e}") from e
    return graphs


def parse_edge_list(text: str) -> Graph:
    """
    Decode exactly one block.

    Raises:
        FormatError: Malformed input or a block count other than one
    """
    graphs = parse_edge_lists(text)
    if len(graphs) != 1:
        raise FormatError(f"Expected one edge-list block, found {len(graphs)}")
    return graphs[0]


def emit_edge_list(G: Graph) -> str:
    edges = list(G.edges())
    lines = [f"{G.n} {len(edges)}"] + [f"{i} {j}" for i, j in edges]
    return "\n".join(lines) + "\n"
