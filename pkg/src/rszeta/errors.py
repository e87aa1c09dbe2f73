"""Exception types shared across the package."""


class RSZetaError(Exception):
    """Base class for all package errors."""


class PoleError(RSZetaError, ValueError):
    """A Gamma argument sits on (or within 1e-12 of) a pole."""


class DomainError(RSZetaError, ValueError):
    """An argument is outside the supported domain (for example x <= 0 for K)."""


class InfeasibleContour(RSZetaError):
    """No straight vertical contour keeps every Gamma argument in the right half-plane."""

    def __init__(self, message, slack=None):
        super().__init__(message)
        self.slack = slack
        self.binding = []


class NonConvergence(RSZetaError):
    """Doubling the truncation height and node count moved the result too much."""

    def __init__(self, message, coarse=None, fine=None):
        super().__init__(message)
        self.coarse = coarse
        self.fine = fine


class UnsupportedRank(RSZetaError, ValueError):
    """The requested rank is outside the implemented range."""


class InvalidPartition(RSZetaError, ValueError):
    """A partition is not weakly decreasing or violates a sign condition."""
