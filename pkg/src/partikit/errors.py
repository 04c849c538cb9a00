"""Exception types raised by partikit."""


class PartikitError(Exception):
    """Base class for every error raised by this package."""


class InvalidWeightsError(PartikitError, ValueError):
    """Weight vector is empty or has a nonpositive entry."""


class PreconditionError(PartikitError, ValueError):
    """An operation was called outside its domain (e.g. non-coprime weights)."""


class DomainError(PreconditionError):
    pass


class FieldMismatchError(PartikitError, ValueError):
    pass


class NotRationalError(PartikitError, ArithmeticError):
    """A cyclotomic element expected to be rational has nonzero higher coordinates."""


class InternalConsistencyError(PartikitError, AssertionError):
    """Two routes that must agree by construction did not."""
