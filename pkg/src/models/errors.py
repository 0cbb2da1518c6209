"""
Exception hierarchy for the core-motzkin library.

Every domain error is a ValueError so callers that only care about "bad input"
can catch the builtin; the CLI maps CoreMotzkinError to exit code 1.
"""


class CoreMotzkinError(ValueError):
    """Base class for all domain errors raised by the library."""


class ParameterError(CoreMotzkinError):
    """Numeric parameters violate a precondition (gcd, p < 2, index range)."""


class NotACoreError(CoreMotzkinError):
    """A partition handed to a bijection is not a core of the requested family."""


class InvalidPathError(CoreMotzkinError):
    """A step word is malformed or fails the constraints of its path type."""


class InexactDivisionError(CoreMotzkinError, ArithmeticError):
    """A formula division left a remainder."""


class OracleCapExceeded(CoreMotzkinError):
    """A brute-force enumeration was asked to go beyond its desk-scale cap."""


class ConfigurationError(CoreMotzkinError):
    """Environment settings could not be parsed."""
