"""Exception types raised across the package."""


class SlitPathsError(Exception):
    """Base class for all errors raised by slitpaths."""


class DivisionByZero(SlitPathsError, ZeroDivisionError):
    pass


class NotAPowerSeries(SlitPathsError, ValueError):
    """The denominator vanishes at t = 0, so there is no Taylor expansion."""


class NonSquareMatrix(SlitPathsError, ValueError):
    pass


class IndexOutOfRange(SlitPathsError, IndexError):
    pass


class DomainError(SlitPathsError, ValueError):
    """Invalid combinatorial input (strip width, heights, step weights, shapes)."""


class NumericFailure(SlitPathsError, ArithmeticError):
    pass


class DegenerateRoots(SlitPathsError, ArithmeticError):
    """Roots too close together for the ratio-of-alternants evaluation."""
