"""
Effective resistance with unit resistors on every edge.

The all-pairs matrix is assembled from the Laplacian eigendecomposition,
R = diag(L+) 1^T + 1 diag(L+)^T - 2 L+, with L+ built from the non-zero
eigenpairs. An independent single-pair oracle grounds one endpoint and solves
the reduced Laplacian system directly.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..exceptions import GraphError, PreconditionError
from ..graphs.core import Graph, is_connected, with_edge
from .eigen import Spectrum
from .laplacian import laplacian, laplacian_spectrum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResistanceMatrix:
    """
    All-pairs effective resistances of a connected graph.

    Attributes:
        values: Symmetric (n, n) array with zero diagonal
    """
    values: np.ndarray

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def __getitem__(self, pair: Tuple[int, int]) -> float:
        """
        Raises:
            GraphError: If r or s lies outside [0, n)
        """
        r, s = pair
        for v in (r, s):
            if not 0 <= v < self.n:
                raise GraphError(f"Vertex {v} out of range [0, {self.n})")
        return float(self.values[r, s])

    def kirchhoff_index(self) -> float:
        """Sum of R over unordered pairs."""
        return float(np.sum(np.triu(self.values, k=1)))

    def triangle_violation(self) -> float:
        """max over a, b, c of R[a, c] - R[a, b] - R[b, c] (non-positive for a metric)."""
        R = self.values
        return float(np.max(R[:, None, :] - R[:, :, None] - R[None, :, :]))


def resistance_from_spectrum(
    G: Graph, spectrum: Spectrum, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> ResistanceMatrix:
    """
    Resistance matrix from an existing Laplacian spectrum of G.

    Raises:
        GraphError: If the spectrum has more than one zero eigenvalue (disconnected)
    """
    zeros = spectrum.count_at_most(tolerances.zero_eigenvalue)
    if zeros != 1:
        raise GraphError(
            f"Effective resistance needs a connected graph; found {zeros} zero eigenvalues"
        )
    values = spectrum.eigenvalues[1:]
    vectors = spectrum.eigenvectors[:, 1:]
    pinv = (vectors / values) @ vectors.T
    diag = np.diag(pinv)
    R = diag[:, None] + diag[None, :] - 2.0 * pinv
    R = (R + R.T) / 2.0
    np.fill_diagonal(R, 0.0)
    return ResistanceMatrix(R)


def resistance_matrix(
    G: Graph,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    spectrum: Optional[Spectrum] = None,
) -> ResistanceMatrix:
    """
    All-pairs effective resistance of a connected graph with n >= 2.

    Raises:
        PreconditionError: If n < 2
        GraphError: If G is disconnected
    """
    if G.n < 2:
        raise PreconditionError(f"Resistance requires n >= 2, got n = {G.n}")
    if spectrum is None:
        spectrum = laplacian_spectrum(G, tolerances)
    return resistance_from_spectrum(G, spectrum, tolerances)


def resistance_variational_oracle(G: Graph, r: int, s: int) -> float:
    """
    R(r, s) from the minimum Dirichlet energy with x_r - x_s = 1.

    Grounds s, injects a unit current at r and solves the reduced Laplacian
    system; the potential at r is the resistance.

    Raises:
        PreconditionError: If r == s
        GraphError: If G is disconnected or an index is out of range
    """
    G._check_vertex(r)
    G._check_vertex(s)
    if r == s:
        raise PreconditionError(f"Resistance oracle needs distinct vertices, got r = s = {r}")
    if not is_connected(G):
        raise GraphError("Effective resistance needs a connected graph")
    keep = [v for v in range(G.n) if v != s]
    reduced = laplacian(G)[np.ix_(keep, keep)]
    rhs = np.zeros(G.n - 1)
    source = keep.index(r)
    rhs[source] = 1.0
    potential = scipy.linalg.solve(reduced, rhs, assume_a="pos")
    return float(potential[source])


def check_rayleigh_monotonicity(
    G: Graph,
    edge: Sequence[int],
    tolerances: Tolerances = DEFAULT_TOLERANCES,
) -> float:
    """
    Largest increase of any R entry caused by adding edge to G.

    Returns:
        max over pairs of (R_after - R_before); at most tolerance for a correct solver

    Raises:
        PreconditionError: If the edge is already present
        GraphError: If G is disconnected
    """
    i, j = edge
    if G.has_edge(i, j):
        raise PreconditionError(f"Edge ({i}, {j}) already present")
    before = resistance_matrix(G, tolerances)
    after = resistance_matrix(with_edge(G, i, j), tolerances)
    return float(np.max(after.values - before.values))


def conductance_lower_bound(s: int, l: int) -> float:
    """
    Lower bound (s - 1)/3 + (l + 1)/(l + 3) on 1/R(v1, v2) for s disjoint
    length-3 paths and gadget parameter l.
    """
    if s < 1 or l < 0:
        raise PreconditionError(f"Conductance bound requires s >= 1 and l >= 0, got ({s}, {l})")
    return (s - 1) / 3 + (l + 1) / (l + 3)
