"""
Laplacian matrices, spectra and Fiedler data.
"""

import logging
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..exceptions import PreconditionError
from ..graphs.core import Graph, complement, connected_components
from .eigen import Spectrum, SymMatrix, eigen_symmetric

logger = logging.getLogger(__name__)

# Entries within this distance of the extreme value count as ties.
TIE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class FiedlerData:
    """
    Second Laplacian eigenpair and its extreme entries.

    Attributes:
        lambda2: Second-smallest Laplacian eigenvalue
        vector: Unit eigenvector for lambda2, orthogonal to the all-ones vector
        v1: Index of the maximum entry (lowest index on ties)
        v2: Index of the minimum entry (lowest index on ties)
        gap: vector[v1] - vector[v2]
        spectrum: Full Laplacian spectrum the data was read from
    """
    lambda2: float
    vector: np.ndarray
    v1: int
    v2: int
    gap: float
    spectrum: Spectrum

    @property
    def n(self) -> int:
        return len(self.vector)


class SpreadReport(NamedTuple):
    spread: float
    bound: float
    slack: float


def laplacian(G: Graph) -> SymMatrix:
    """L = D - A as a dense float matrix."""
    A = G.adjacency_matrix()
    return np.diag(A.sum(axis=1)) - A


def laplacian_spectrum(
    G: Graph, tolerances: Tolerances = DEFAULT_TOLERANCES, method: str = "lapack"
) -> Spectrum:
    return eigen_symmetric(
        laplacian(G), tol=tolerances.eigen, method=method, residual_tol=tolerances.residual
    )


def _first_extreme(x: np.ndarray, largest: bool) -> int:
    target = x.max() if largest else x.min()
    close = np.abs(x - target) <= TIE_TOLERANCE
    return int(np.flatnonzero(close)[0])


def _component_indicator(G: Graph) -> np.ndarray:
    """Unit zero-sum vector constant on the first component and on the rest."""
    first = connected_components(G)[0]
    x = np.full(G.n, -1.0 / (G.n - len(first)))
    x[first] = 1.0 / len(first)
    return x / np.linalg.norm(x)


def fiedler_from_spectrum(
    G: Graph, spectrum: Spectrum, tolerances: Tolerances = DEFAULT_TOLERANCES
) -> FiedlerData:
    lambda2 = float(spectrum.eigenvalues[1])
    if lambda2 <= tolerances.zero_eigenvalue and len(connected_components(G)) > 1:
        # the null space is degenerate; pick the deterministic component split
        x = _component_indicator(G)
    else:
        x = spectrum.eigenvectors[:, 1].copy()
    v1 = _first_extreme(x, largest=True)
    v2 = _first_extreme(x, largest=False)
    return FiedlerData(lambda2, x, v1, v2, float(x[v1] - x[v2]), spectrum)


def algebraic_connectivity(
    G: Graph,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    spectrum: Optional[Spectrum] = None,
) -> FiedlerData:
    """
    Fiedler data of G.

    Args:
        G: Graph with n >= 2
        tolerances: Solver and connectivity tolerances
        spectrum: Precomputed Laplacian spectrum of G (computed if omitted)

    Returns:
        FiedlerData; lambda2 > tolerances.zero_eigenvalue iff G is connected

    Raises:
        PreconditionError: If n < 2
    """
    if G.n < 2:
        raise PreconditionError(f"Algebraic connectivity requires n >= 2, got n = {G.n}")
    if spectrum is None:
        spectrum = laplacian_spectrum(G, tolerances)
    return fiedler_from_spectrum(G, spectrum, tolerances)


def check_complement_duality(
    G: Graph,
    tolerances: Tolerances = DEFAULT_TOLERANCES,
    spectrum: Optional[Spectrum] = None,
    complement_spectrum: Optional[Spectrum] = None,
) -> float:
    """
    Worst violation of lambda_{i+1}(G) + lambda_{n+1-i}(complement G) = n, i = 1..n-1.

    The caller decides what residual is acceptable.
    """
    if G.n < 2:
        raise PreconditionError(f"Complement duality requires n >= 2, got n = {G.n}")
    ours = (spectrum or laplacian_spectrum(G, tolerances)).eigenvalues
    theirs = (complement_spectrum or laplacian_spectrum(complement(G), tolerances)).eigenvalues
    n = G.n
    return float(max(abs(ours[i] + theirs[n - i] - n) for i in range(1, n)))


def _as_vector(G: Graph, z: Sequence[float]) -> np.ndarray:
    z = np.asarray(z, dtype=np.float64)
    if z.shape != (G.n,):
        raise PreconditionError(f"Vector length {z.shape} does not match graph order {G.n}")
    return z


def edge_energy(G: Graph, z: Sequence[float]) -> float:
    """Sum over edges of (z_i - z_j)^2."""
    z = _as_vector(G, z)
    if G.num_edges == 0:
        return 0.0
    i, j = np.array(list(G.edges())).T
    return float(np.sum((z[i] - z[j]) ** 2))


def pair_energy(z: Sequence[float]) -> float:
    """Sum over all pairs i < j of (z_i - z_j)^2, i.e. n*||z||^2 - (sum z)^2."""
    z = np.asarray(z, dtype=np.float64)
    diff = z[:, None] - z[None, :]
    return float(np.sum(np.triu(diff * diff, k=1)))


def fiedler_quotient_check(
    G: Graph,
    z: Sequence[float],
    fiedler: Optional[FiedlerData] = None,
) -> float:
    """
    Slack of edge_energy(G, z) >= (lambda(G) / n) * pair_energy(z).

    Non-negative for every z (up to round-off) and zero at the Fiedler vector.
    """
    if G.n < 2:
        raise PreconditionError(f"Fiedler quotient requires n >= 2, got n = {G.n}")
    f = fiedler or algebraic_connectivity(G)
    return edge_energy(G, z) - f.lambda2 / G.n * pair_energy(z)


def laplacian_spread(
    G: Graph,
    spectrum: Optional[Spectrum] = None,
) -> SpreadReport:
    """
    lambda_n - lambda_2 against its bound n - 1.

    The bound is equivalent to lambda(G) + lambda(complement G) >= 1.
    """
    if G.n < 2:
        raise PreconditionError(f"Laplacian spread requires n >= 2, got n = {G.n}")
    values = (spectrum or laplacian_spectrum(G)).eigenvalues
    spread = float(values[-1] - values[1])
    return SpreadReport(spread, float(G.n - 1), float(G.n - 1) - spread)
