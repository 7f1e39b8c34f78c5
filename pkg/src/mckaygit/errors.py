"""Exception hierarchy shared across the package."""


class McKayGitError(Exception):
    """Base class for all package errors."""


class ValidationError(McKayGitError, ValueError):
    """Raised when an input violates a documented precondition."""


class ResourceCapError(McKayGitError, RuntimeError):
    """Raised when an enumeration exceeds its configured resource cap.

    Enumerations fail loudly instead of truncating silently.
    """


class NotEffectiveError(ValidationError):
    """Raised when a dimension vector is not an N-combination of the relevant roots."""


class WallPointError(ValidationError):
    """Raised when a parameter is not a generic point of a single wall."""

    def __init__(self, message, hyperplanes=()):
        super().__init__(message)
        self.hyperplanes = tuple(hyperplanes)


class InternalInvariantError(McKayGitError, AssertionError):
    """Raised when an internal consistency check fails; indicates a bug."""
