"""Exceptions shared across the package."""


class NOutOfRangeError(ValueError):
    """The number of places n falls outside the window an operation supports."""


class DegreeWindowError(ValueError):
    """deg(G) violates the 2g-2 < deg(G) < N window of the code construction.

    The offending degree and the side that failed are kept on the exception so
    parameter sweeps can skip invalid specs without string matching.
    """

    def __init__(self, message: str, degree: int, side: str):
        super().__init__(message)
        self.degree = degree
        self.side = side  # "lower" or "upper"


class PeriodSearchError(RuntimeError):
    """The period search ran past its bound: the curve data is inconsistent."""
