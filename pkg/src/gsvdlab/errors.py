"""Exception hierarchy shared across the package.

ArgumentError maps to CLI exit code 2, NumericalError (and subclasses)
to exit code 3, BoundViolationError to exit code 4.
"""


class GsvdLabError(Exception):
    """Base class for all package errors."""


class ArgumentError(GsvdLabError, ValueError):
    """Invalid user-supplied arguments (dimensions, condition numbers, ...)."""


class NumericalError(GsvdLabError):
    """A numerical operation failed or produced an inconsistent result."""


class RankDeficiencyError(NumericalError):
    """A matrix required to have full column rank is (numerically) rank deficient."""


class NotSpdError(NumericalError):
    """A matrix required to be symmetric positive definite failed Cholesky."""


class PerturbationTooLargeError(NumericalError):
    """An injected perturbation destroyed positive definiteness."""


class SelectionError(NumericalError):
    """Fewer positive eigenvalues available than requested."""


class SpectrumAnomalyError(NumericalError):
    """The computed spectrum does not have the expected sign structure."""


class DegenerateVectorError(NumericalError):
    """A vector that must be nonzero vanished during recovery."""


class ContractError(GsvdLabError):
    """Inputs violate a documented type invariant."""


class MatrixMarketError(GsvdLabError):
    """Base class for Matrix Market parse failures."""


class MatrixMarketFileMissing(MatrixMarketError):
    pass


class MatrixMarketHeaderError(MatrixMarketError):
    pass


class MatrixMarketFieldError(MatrixMarketError):
    """Unsupported field (e.g. complex entries)."""


class BoundViolationError(GsvdLabError):
    """An observed error exceeded its theoretical bound beyond slack."""
