"""Exception hierarchy shared by every module in the package."""


class MonobasisError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(MonobasisError, ValueError):
    pass


class ZeroPolynomialError(MonobasisError, ValueError):
    """Raised when a leading/least monomial is requested from the zero polynomial."""


class ZeroPivot(MonobasisError):
    """An input polynomial was eliminated to zero during reverse reduction.

    ``index`` is the 0-based position of the offending polynomial in the
    input list.
    """

    def __init__(self, index):
        self.index = index
        super().__init__(f"polynomial {index} reduced to zero (inputs are linearly dependent)")


class ZeroAfterTruncation(MonobasisError):
    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"shifted condition has no term of total degree <= {cap}")


class EmptyProblem(MonobasisError, ValueError):
    pass


class DependentConditions(MonobasisError):
    """The interpolation conditions are not linearly independent functionals.

    ``tag`` is the ``(site, condition)`` index pair of the condition that was
    found to depend on the ones before it, when known.
    """

    def __init__(self, message, tag=None):
        self.tag = tag
        super().__init__(message)


class PoolTooLarge(MonobasisError):
    pass


class NoBasisInPool(MonobasisError):
    pass


class ParseError(MonobasisError, ValueError):
    """Malformed expression text. ``position`` is a 0-based character offset."""

    def __init__(self, message, position=None, expected=None):
        self.position = position
        self.expected = expected
        if position is not None:
            message = f"{message} at position {position}"
        if expected:
            message = f"{message} (expected {expected})"
        super().__init__(message)


class UnknownVariable(ParseError):
    def __init__(self, name, position=None):
        self.name = name
        super().__init__(f"unknown variable {name!r}", position)


class NegativeExponent(ParseError):
    def __init__(self, position=None):
        super().__init__("negative exponent", position)
