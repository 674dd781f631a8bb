"""
Numerical tolerances and enumeration limits shared by every module.
"""

from dataclasses import dataclass
from typing import Dict


@dataclass(frozen=True)
class Tolerances:
    """
    Tolerance set used by solvers and audits.

    Attributes:
        eigen: Off-diagonal convergence threshold of the Jacobi solver
        residual: Maximum accepted ||M v - lambda v|| for a returned eigenpair
        zero_eigenvalue: Eigenvalues at or below this count as zero (connectivity)
        audit: Slack tolerance for certificate checks
        oracle: Agreement tolerance between two independent methods
    """
    eigen: float = 1e-11
    residual: float = 1e-9
    zero_eigenvalue: float = 1e-9
    audit: float = 1e-7
    oracle: float = 1e-8

    def with_audit(self, audit: float) -> "Tolerances":
        """Copy with a different audit tolerance (the CLI --tol flag)."""
        if audit <= 0:
            raise ValueError(f"Audit tolerance must be positive, got {audit}")
        return Tolerances(
            eigen=self.eigen,
            residual=self.residual,
            zero_eigenvalue=self.zero_eigenvalue,
            audit=audit,
            oracle=self.oracle,
        )


DEFAULT_TOLERANCES = Tolerances()

# Exact canonical labelling is supported up to this order.
MAX_CANONICAL_ORDER = 10

# Orders enumerated without the long-running switch.
MAX_GUARANTEED_ORDER = 8
MAX_LONG_ORDER = 10

# Number of isomorphism classes of simple graphs on n vertices.
KNOWN_CLASS_COUNTS: Dict[int, int] = {
    1: 1,
    2: 2,
    3: 4,
    4: 11,
    5: 34,
    6: 156,
    7: 1044,
    8: 12346,
    9: 274668,
    10: 12005168,
}

# Prior constant lower bound on max{lambda(G), lambda(complement G)}.
PRIOR_MINMAX_CONSTANT = 0.4

# Audits per worker task in the exhaustive driver.
AUDIT_CHUNK_SIZE = 4096
