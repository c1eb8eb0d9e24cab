"""Exception hierarchy shared across the package."""


class HelperNetError(Exception):
    """Base class for every error raised by this package."""


class InputError(HelperNetError, ValueError):
    """Arguments violate a documented precondition (domain, shape, range)."""


class OracleError(HelperNetError, ArithmeticError):
    """An information quantity could not be evaluated reliably.

    Raised for indefinite covariance matrices, degenerate variable sets
    (linear dependence inside one set), and badly conditioned results.
    """


class UnboundedRegionError(HelperNetError):
    """A half-space description does not bound the nonnegative orthant."""
