"""Exception hierarchy shared by the whole toolkit."""


class DSGraphError(Exception):
    """Base class for every error raised by :mod:`dsgraph`."""


class UsageError(DSGraphError, ValueError):
    """Invalid arguments: bad parameters, mismatched moduli, out-of-range ids."""


class DomainError(DSGraphError, ValueError):
    """A value lies outside the domain of an operation (e.g. ``inv(0)``)."""


class ResourceError(DSGraphError, RuntimeError):
    """A configured resource cap was exceeded."""

    def __init__(self, message: str, cap_name: str = "", cap: int = 0, size: int = 0):
        super().__init__(message)
        self.cap_name = cap_name
        self.cap = cap
        self.size = size


class InconsistencyError(DSGraphError, AssertionError):
    """Internal cross-check failed; a closed form contradicts itself."""
