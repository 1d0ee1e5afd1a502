"""Exception types shared across the package."""


class CobographError(Exception):
    """Base class for all package errors."""


class SizeTooSmall(CobographError):
    """Graph generator parameters below the family's minimum size."""


class SelfLoop(CobographError):
    """An edge (i, i) was supplied."""


class DuplicateEdge(CobographError):
    """The same undirected edge was supplied twice."""


class InvalidNode(CobographError):
    """A node index outside [0, num_nodes)."""


class ParseError(CobographError):
    """Malformed graph file; carries the offending line number."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class DisconnectedGraph(CobographError):
    """The operation requires a connected graph."""


class DimensionMismatch(CobographError):
    """Vector or matrix dimensions do not agree."""


class DimensionZero(CobographError):
    """Eigensolve requested on an empty matrix."""


class DimensionTooLarge(CobographError):
    """Dense diagonalization requested above the oracle's size cap."""


class NoConvergence(CobographError):
    """Iterative eigensolve did not reach the requested residual.

    Carries the best iterate found so far in ``best`` (may be None).
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class DegenerateGroundState(CobographError):
    """Lowest eigenvalue is not simple within tolerance."""


class GaugeError(CobographError):
    """Eigenvector cannot be brought to the non-negative sign convention."""


class NotNormalized(CobographError):
    """Input amplitude vector is not unit norm."""


class VanishingChi(CobographError):
    """Pair-exclusion normalization factor is zero; the ansatz is undefined."""


class InsufficientPoints(CobographError):
    """Dimension fit needs at least three distinct sizes."""
