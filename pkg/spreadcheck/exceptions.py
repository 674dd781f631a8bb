"""
Exception hierarchy.

Everything raised on purpose by spreadcheck derives from SpreadcheckError, and
each class also derives from the builtin a caller would naturally catch.
"""


class SpreadcheckError(Exception):
    """Base class for spreadcheck errors."""


class GraphError(SpreadcheckError, ValueError):
    """Invalid graph, vertex index or graph-level requirement (e.g. connectivity)."""


class PreconditionError(SpreadcheckError, ValueError):
    """An operation was called outside its documented preconditions."""


class EigenSolverError(SpreadcheckError, RuntimeError):
    """Eigensolver did not converge or returned pairs above the residual tolerance."""


class FormatError(SpreadcheckError, ValueError):
    """Malformed graph6 or edge-list input."""


class EnumerationError(SpreadcheckError, ValueError):
    """Requested order is outside the supported enumeration range."""


class CertificateError(SpreadcheckError, RuntimeError):
    """An internal invariant of the case analysis was violated."""
