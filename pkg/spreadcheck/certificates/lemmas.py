"""
The lemma-level checks: disconnected graphs, the pairwise product identity,
the extreme-pair distance bound, and the Step-1 chain.
"""

import logging
from typing import NamedTuple, Optional, Sequence

import numpy as np

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..exceptions import GraphError, PreconditionError
from ..graphs.core import Graph, complement, diameter, distance, is_connected, remove_vertex
from ..spectra.laplacian import FiedlerData, algebraic_connectivity

logger = logging.getLogger(__name__)


class ConeJoinWitness(NamedTuple):
    holds: bool
    vertex: Optional[int]


class DisconnectedLemmaResult(NamedTuple):
    lambda_complement: float
    equality: bool
    structural: bool
    witness_vertex: Optional[int]


class IdentityResult(NamedTuple):
    lhs: float
    rhs: float
    slack: float
    expansion_error: float


class DiameterLemmaResult(NamedTuple):
    extreme_distance: float
    lambda2: float
    diameter: float
    implication_holds: bool
    corollary_holds: bool


class Step1Result(NamedTuple):
    minsum: float
    weighted: float
    M: float
    bound: float


def is_join_of_cone_and_disconnected(G: Graph) -> ConeJoinWitness:
    """
    True iff some vertex v has degree n - 1 and G - v is disconnected.

    Returns:
        (holds, first such v or None)
    """
    if G.n < 2:
        raise PreconditionError(f"Cone-join test requires n >= 2, got n = {G.n}")
    for v, degree in enumerate(G.degrees()):
        if degree == G.n - 1 and not is_connected(remove_vertex(G, v)):
            return ConeJoinWitness(True, v)
    return ConeJoinWitness(False, None)


def lemma_disconnected_check(
    G: Graph,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    complement_fiedler: Optional[FiedlerData] = None,
) -> DisconnectedLemmaResult:
    """
    For disconnected G: lambda(complement G) >= 1, with equality exactly when the
    complement is K1 joined to a disconnected graph.

    Raises:
        PreconditionError: If G is connected
    """
    if is_connected(G):
        raise PreconditionError("Disconnected-graph lemma needs a disconnected graph")
    Gc = complement(G)
    f = complement_fiedler or algebraic_connectivity(Gc, tolerances)
    witness = is_join_of_cone_and_disconnected(Gc)
    equality = abs(f.lambda2 - 1.0) <= tolerances.audit
    return DisconnectedLemmaResult(f.lambda2, equality, witness.holds, witness.vertex)


def lemma_identity_check(
    x: Sequence[float],
    y: Sequence[float],
    tol: float = DEFAULT_TOLERANCES.oracle,
) -> IdentityResult:
    """
    sum_{i<j} (x_i - x_j)^2 (y_i - y_j)^2 >= ||x||^2 ||y||^2 for zero-sum x, y.

    Also measures the relative error of the exact expansion
    2 * lhs = 2n sum x_i^2 y_i^2 + 2 ||x||^2 ||y||^2 + 4 (x . y)^2.

    Raises:
        PreconditionError: Length mismatch or a vector that does not sum to zero
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise PreconditionError(f"Vectors must have equal length, got {x.shape} and {y.shape}")
    n = len(x)
    for label, z in (("x", x), ("y", y)):
        if abs(z.sum()) > tol * max(1.0, float(np.abs(z).sum())):
            raise PreconditionError(f"Vector {label} must sum to zero, sum = {z.sum():.3e}")
    dx = x[:, None] - x[None, :]
    dy = y[:, None] - y[None, :]
    lhs = float(np.sum(np.triu(dx * dx * dy * dy, k=1)))
    rhs = float(x @ x) * float(y @ y)
    expansion = 2 * n * float(np.sum(x * x * y * y)) + 2 * rhs + 4 * float(x @ y) ** 2
    error = abs(2 * lhs - expansion) / max(expansion, np.finfo(float).tiny)
    return IdentityResult(lhs, rhs, lhs - rhs, error)


def lemma_diameter_check(
    G: Graph,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    fiedler: Optional[FiedlerData] = None,
) -> DiameterLemmaResult:
    """
    Extreme-pair distance <= 2 implies lambda >= 1; so does diameter < 3.

    Raises:
        PreconditionError: If n < 2
        GraphError: If G is disconnected
    """
    if G.n < 2:
        raise PreconditionError(f"Diameter lemma requires n >= 2, got n = {G.n}")
    if not is_connected(G):
        raise GraphError("Diameter lemma needs a connected graph")
    f = fiedler or algebraic_connectivity(G, tolerances)
    d = distance(G, f.v1, f.v2)
    diam = diameter(G)
    reaches_one = f.lambda2 >= 1.0 - tolerances.audit
    return DiameterLemmaResult(
        extreme_distance=d,
        lambda2=f.lambda2,
        diameter=diam,
        implication_holds=d > 2 or reaches_one,
        corollary_holds=diam >= 3 or reaches_one,
    )


def neighbor_bound_check(G: Graph, f: FiedlerData) -> float:
    """
    Worst slack of x_i >= (1 - lambda) x_{v1} over neighbours i of v1 and of
    x_j <= (1 - lambda) x_{v2} over neighbours j of v2.
    """
    x = f.vector
    shrink = 1.0 - f.lambda2
    slacks = [x[i] - shrink * x[f.v1] for i in G.neighbors(f.v1)]
    slacks += [shrink * x[f.v2] - x[j] for j in G.neighbors(f.v2)]
    return float(min(slacks)) if slacks else float("inf")


def step1_bound(
    x: FiedlerData,
    y: FiedlerData,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> Step1Result:
    """
    Quantities of the chain
    lambda + lambda-bar >= sum_{i<j} min{(x_i-x_j)^2, (y_i-y_j)^2}
                        >= sum_{i<j} (x_i-x_j)^2 (y_i-y_j)^2 / M >= 1 / M.

    Args:
        x: Fiedler data of a connected graph
        y: Fiedler data of its (connected) complement

    Raises:
        PreconditionError: Disconnected side or vectors of different length
    """
    if x.n != y.n:
        raise PreconditionError(f"Fiedler vectors differ in length: {x.n} vs {y.n}")
    if min(x.lambda2, y.lambda2) <= tolerances.zero_eigenvalue:
        raise PreconditionError("Step-1 chain needs both the graph and its complement connected")
    dx = x.vector[:, None] - x.vector[None, :]
    dy = y.vector[:, None] - y.vector[None, :]
    sx, sy = dx * dx, dy * dy
    upper = np.triu(np.ones_like(sx, dtype=bool), k=1)
    minsum = float(np.sum(np.minimum(sx, sy)[upper]))
    M = float(max(sx.max(), sy.max()))
    weighted = float(np.sum((sx * sy)[upper])) / M
    return Step1Result(minsum, weighted, M, 1.0 / M)
