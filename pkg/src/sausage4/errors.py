"""Exception taxonomy shared across the package."""


class Sausage4Error(Exception):
    """Base class for all package errors."""


class DomainError(Sausage4Error, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class UsageError(Sausage4Error, ValueError):
    """An API was called with a name or option that does not exist."""


class ResourceError(Sausage4Error, RuntimeError):
    """A request exceeds a configured resource cap (e.g. enumeration size)."""


class InternalError(Sausage4Error, RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class VerificationFailure(Sausage4Error, AssertionError):
    """A certified check that is expected to hold did not."""
