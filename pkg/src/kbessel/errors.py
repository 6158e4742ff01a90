"""Exception types raised by the library.

All error signaling is by raised exceptions; no routine returns NaN or a
silently saturated value.
"""


class KBesselError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(KBesselError, ValueError):
    """A structural parameter (k, order bound, term count, ...) is out of range."""


class DomainError(KBesselError, ValueError):
    """The evaluation point lies outside the function's domain."""


class NonConvergence(KBesselError, ArithmeticError):
    """An iterative evaluation hit its term cap before reaching tolerance."""


class Overflow(KBesselError, OverflowError):
    """The result (or a required intermediate) exceeds double-precision range."""


class QuadratureFailure(KBesselError, ArithmeticError):
    """Node-doubling refinement exhausted without meeting the tolerance."""
