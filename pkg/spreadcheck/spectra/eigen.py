"""
Dense symmetric eigensolver.

Two interchangeable back ends return the same Spectrum contract:
"lapack" (scipy.linalg.eigh, the default) and "jacobi" (cyclic Jacobi
rotations). Both sort eigenvalues ascending with a stable sort, fix each
eigenvector's sign so that its first non-negligible entry is positive, and
reject results whose residual exceeds the configured tolerance.
"""

import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ..config import DEFAULT_TOLERANCES
from ..exceptions import EigenSolverError, PreconditionError

logger = logging.getLogger(__name__)

SymMatrix = np.ndarray

JACOBI_MAX_SWEEPS = 100
SIGN_THRESHOLD = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """
    Eigen-decomposition of a symmetric matrix.

    Attributes:
        eigenvalues: Ascending eigenvalues, shape (n,)
        eigenvectors: Orthonormal columns, column i paired with eigenvalues[i]
        residual_bound: max_i ||M v_i - lambda_i v_i||_2
    """
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    residual_bound: float

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    def count_at_most(self, threshold: float) -> int:
        return int(np.count_nonzero(self.eigenvalues <= threshold))


def _check_symmetric(M: np.ndarray) -> np.ndarray:
    M = np.asarray(M, dtype=np.float64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise PreconditionError(f"Expected a square matrix, got shape {M.shape}")
    if not np.array_equal(M, M.T):
        raise PreconditionError("Matrix is not exactly symmetric")
    return M


def _jacobi(M: np.ndarray, tol: float) -> tuple:
    """Cyclic-by-row Jacobi; raises EigenSolverError after JACOBI_MAX_SWEEPS."""
    n = M.shape[0]
    A = M.copy()
    V = np.eye(n)
    scale = max(1.0, float(np.linalg.norm(M)))
    for sweep in range(JACOBI_MAX_SWEEPS):
        off = np.sqrt(max(0.0, float(np.sum(A * A) - np.sum(np.diag(A) ** 2))))
        if off <= tol * scale:
            logger.debug(f"Jacobi converged after {sweep} sweeps (off = {off:.3e})")
            return np.diag(A).copy(), V
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_p, col_q = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p, row_q = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = A[q, p] = 0.0
                vec_p, vec_q = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vec_p - s * vec_q
                V[:, q] = s * vec_p + c * vec_q
    raise EigenSolverError(
        f"Jacobi eigensolver did not converge within {JACOBI_MAX_SWEEPS} sweeps (n = {n})"
    )


def _lapack(M: np.ndarray) -> tuple:
    try:
        return scipy.linalg.eigh(M)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise EigenSolverError(f"LAPACK symmetric eigensolver failed: {e}") from e


def _normalize_signs(V: np.ndarray) -> np.ndarray:
    V = V.copy()
    for k in range(V.shape[1]):
        significant = np.flatnonzero(np.abs(V[:, k]) > SIGN_THRESHOLD)
        if len(significant) and V[significant[0], k] < 0:
            V[:, k] = -V[:, k]
    return V


def eigen_symmetric(
    M: SymMatrix,
    tol: float = DEFAULT_TOLERANCES.eigen,
    method: str = "lapack",
    residual_tol: float = DEFAULT_TOLERANCES.residual,
) -> Spectrum:
    """
    Eigenvalues and orthonormal eigenvectors of a symmetric matrix.

    Args:
        M: Exactly symmetric real matrix
        tol: Off-diagonal convergence threshold (Jacobi), must be positive
        method: 'lapack' or 'jacobi'
        residual_tol: Largest accepted eigenpair residual

    Returns:
        Spectrum with ascending eigenvalues

    Raises:
        PreconditionError: Non-square or non-symmetric input, tol <= 0, unknown method
        EigenSolverError: Non-convergence or residual above residual_tol
    """
    if tol <= 0:
        raise PreconditionError(f"Eigen tolerance must be positive, got {tol}")
    M = _check_symmetric(M)
    n = M.shape[0]
    if n == 0:
        return Spectrum(np.zeros(0), np.zeros((0, 0)), 0.0)

    if method == "lapack":
        values, vectors = _lapack(M)
    elif method == "jacobi":
        values, vectors = _jacobi(M, tol)
    else:
        raise PreconditionError(f"Unknown eigen method: {method}. Use 'lapack' or 'jacobi'")

    order = np.argsort(values, kind="stable")
    values = np.asarray(values)[order]
    vectors = _normalize_signs(np.asarray(vectors)[:, order])

    residual = float(np.max(np.linalg.norm(M @ vectors - vectors * values, axis=0)))
    if residual > residual_tol:
        raise EigenSolverError(
            f"Eigen residual {residual:.3e} exceeds tolerance {residual_tol:.1e} (n = {n})"
        )
    return Spectrum(values, vectors, residual)
