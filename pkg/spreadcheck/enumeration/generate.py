"""
Graph generation: one representative per isomorphism class, and seeded
random graphs.

Classes of order k are produced from the representatives of order k - 1 by
adding a vertex k - 1 with every possible neighbourhood mask. A child is kept
when its canonical code has not been seen at level k; the kept graph is the
canonically labelled form, so each emitted graph is its own canonical
representative. Every graph of order k arises this way (delete any vertex),
hence the levels are complete.
"""

import logging
from typing import Iterator, List, Optional

import numpy as np

from ..config import KNOWN_CLASS_COUNTS, MAX_GUARANTEED_ORDER, MAX_LONG_ORDER
from ..exceptions import EnumerationError, PreconditionError
from ..graphs.canonical import CanonicalCode, canonical_bits
from ..graphs.core import Graph, build_graph

logger = logging.getLogger(__name__)

RNG_ALGORITHM = "numpy PCG64"


def check_order(n: int, allow_long: bool = False) -> None:
    """
    Raises:
        EnumerationError: n outside [1, 8], or outside [1, 10] with allow_long
    """
    limit = MAX_LONG_ORDER if allow_long else MAX_GUARANTEED_ORDER
    if not 1 <= n <= limit:
        hint = ""
        if not allow_long and MAX_GUARANTEED_ORDER < n <= MAX_LONG_ORDER:
            hint = " (orders 9-10 need the long-running switch)"
        raise EnumerationError(f"Enumeration supports 1 <= n <= {limit}, got n = {n}{hint}")


def _extend(parent: Graph, mask: int) -> List[int]:
    k = parent.n
    rows = list(parent.rows) + [mask]
    for i in range(k):
        if mask >> i & 1:
            rows[i] |= 1 << k
    return rows


def enumerate_graphs(n: int, allow_long: bool = False) -> Iterator[Graph]:
    """
    Stream one canonical representative per isomorphism class of order n.

    Args:
        n: Order
        allow_long: Permit n = 9 and n = 10

    Yields:
        Graphs in a deterministic order

    Raises:
        EnumerationError: Order out of range
    """
    check_order(n, allow_long)
    if n > MAX_GUARANTEED_ORDER:
        logger.warning(f"Enumerating order {n}: {KNOWN_CLASS_COUNTS[n]} classes, long-running")

    level = [Graph(1, (0,))]
    if n == 1:
        yield level[0]
        return

    for k in range(2, n + 1):
        seen = set()
        children: List[Graph] = []
        last = k == n
        for parent in level:
            for mask in range(1 << (k - 1)):
                code = canonical_bits(k, _extend(parent, mask))
                if code in seen:
                    continue
                seen.add(code)
                child = CanonicalCode(k, code).to_graph()
                if last:
                    yield child
                else:
                    children.append(child)
        if not last:
            logger.debug(f"Order {k}: {len(children)} classes")
            level = children
        else:
            logger.info(f"Order {n}: {len(seen)} classes generated")


def count_graphs(n: int, allow_long: bool = False) -> int:
    return sum(1 for _ in enumerate_graphs(n, allow_long))


def random_graph(n: int, p: float, seed: Optional[int] = None) -> Graph:
    """
    Erdos-Renyi G(n, p).

    One uniform draw per pair (i, j), i < j, in row-major order; the pair is an
    edge iff its draw is below p. The generator is numpy's PCG64 seeded with
    `seed`, so equal (n, p, seed) give equal graphs.

    Raises:
        PreconditionError: p outside [0, 1] or negative n
    """
    if not 0.0 <= p <= 1.0:
        raise PreconditionError(f"Edge probability must lie in [0, 1], got {p}")
    if n < 0:
        raise PreconditionError(f"Order must be non-negative, got {n}")
    rng = np.random.default_rng(seed)
    draws = rng.random(n * (n - 1) // 2)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return build_graph(n, [pair for pair, draw in zip(pairs, draws) if draw < p])


def random_graphs(
    count: int,
    min_order: int,
    max_order: int,
    p: Optional[float] = None,
    seed: Optional[int] = None,
) -> Iterator[Graph]:
    """
    Seeded batch of random graphs.

    Orders are uniform on [min_order, max_order]; when p is None each graph
    draws its own edge probability uniformly from [0.1, 0.9].
    """
    if not 1 <= min_order <= max_order:
        raise PreconditionError(f"Need 1 <= min_order <= max_order, got ({min_order}, {max_order})")
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(min_order, max_order + 1))
        q = float(rng.uniform(0.1, 0.9)) if p is None else p
        yield random_graph(n, q, seed=int(rng.integers(2**63 - 1)))
