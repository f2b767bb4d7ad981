"""Exception types shared across the package.

The distinction that matters downstream (CLI exit codes, tests):
bad input vs. resource guard vs. a broken internal invariant.
"""


class SymmonError(Exception):
    """Base class for all package errors."""


class PreconditionError(SymmonError, ValueError):
    """An operation was called with input violating its contract."""


class DegenerateRootError(PreconditionError):
    """Reflection requested at a vector of zero norm."""


class UnsupportedFamilyError(PreconditionError):
    """The requested family/realization is not provided."""


class NotSpecialError(PreconditionError):
    """A weight required to satisfy theta*(lambda) = -lambda does not."""


class ResourceLimitError(SymmonError, RuntimeError):
    """A desk-scale enumeration guard was exceeded."""


class InvariantViolationError(SymmonError, RuntimeError):
    """An internal invariant failed; indicates a bug or bad characteristic."""
