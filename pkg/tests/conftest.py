import sys
from pathlib import Path
from typing import Dict, List

import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from spreadcheck.enumeration import enumerate_graphs  # noqa: E402
from spreadcheck.graphs.core import Graph, build_graph  # noqa: E402

_ENUMERATED: Dict[int, List[Graph]] = {}


def graphs_of_order(n: int) -> List[Graph]:
    """Enumerated class representatives, cached for the whole session."""
    if n not in _ENUMERATED:
        _ENUMERATED[n] = list(enumerate_graphs(n))
    return _ENUMERATED[n]


def connected_graphs_up_to(max_order: int) -> List[Graph]:
    from spreadcheck.graphs.core import is_connected

    return [G for n in range(2, max_order + 1) for G in graphs_of_order(n) if is_connected(G)]


@pytest.fixture
def p4() -> Graph:
    return build_graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def paw() -> Graph:
    """Triangle 1-2-3 with pendant vertex 0 attached to 1."""
    return build_graph(4, [(0, 1), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def k2() -> Graph:
    return build_graph(2, [(0, 1)])
