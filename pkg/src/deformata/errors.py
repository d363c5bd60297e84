"""Exception hierarchy shared by every module."""


class DeformataError(Exception):
    """Base class for all errors raised by deformata."""


class InputError(DeformataError, ValueError):
    """Malformed or inconsistent input data."""


class PreconditionError(DeformataError):
    """An operation was called on data violating its precondition."""


class CommutativeError(DeformataError):
    """The algebra is commutative through the truncation order."""


class InconclusiveError(DeformataError):
    """A solver could not reach a verified answer."""
