"""Exception hierarchy.

Every error raised on purpose by the package derives from :class:`ReboundError`
and also from the closest builtin (``ValueError`` for bad input), so callers
that only know about builtins still catch them. The CLI maps the three
families below onto distinct exit codes.
"""


class ReboundError(Exception):
    """Base class for all package errors."""


class ConfigError(ReboundError, ValueError):
    """Invalid pipeline configuration."""


class IngestError(ReboundError, ValueError):
    """Input file could not be read into a Dataset."""


class AlignmentError(IngestError):
    """Series could not be aligned on a common, gap-free year axis."""


class NumericError(ReboundError, ValueError):
    """A computation could not be carried out on the given numbers."""


class DomainError(NumericError):
    """Input outside the mathematical domain of an operation (e.g. log of 0)."""


class InsufficientDataError(NumericError):
    """Too few observations for the requested operation."""


class SingularDesignError(NumericError):
    """Regression design matrix is rank deficient."""


class DecompositionError(NumericError):
    """A matrix factorisation failed (e.g. Cholesky on a non-PD matrix)."""


class DegenerateModelError(NumericError):
    """Model coefficients make a derived quantity undefined."""
