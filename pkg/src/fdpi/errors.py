"""Exception hierarchy shared by the library and the command line."""


class FdpiError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameterError(FdpiError, ValueError):
    """Malformed or out-of-range input parameters."""


class InvalidFieldError(InvalidParameterError):
    """The integers given do not define the required quadratic fields."""


class NotPrimeError(FdpiError, ValueError):
    """A modulus that must be prime is not."""


class NonInvertibleError(FdpiError, ZeroDivisionError):
    pass


class InvalidIdealError(FdpiError, ValueError):
    """A pair (r, p) is not a first-degree prime ideal of the ring at hand."""


class PreconditionError(FdpiError, ValueError):
    """A domain precondition does not hold (norm mismatch, non-divisor, ...)."""
