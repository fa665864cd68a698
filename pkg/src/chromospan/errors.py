"""Exception hierarchy shared by all chromospan modules."""


class ChromospanError(ValueError):
    """Base class for every error raised by this package."""


class DuplicatePoints(ChromospanError):
    pass


class DuplicatePoint(DuplicatePoints):
    """An online insertion repeats a point already in the history."""


class CollinearBase(ChromospanError):
    pass


class CoincidentEndpoints(ChromospanError):
    pass


class DegenerateRay(ChromospanError):
    pass


class TooFewPoints(ChromospanError):
    pass


class AllCollinear(ChromospanError):
    pass


class ColoringSearchFailed(ChromospanError):
    """Exact search found no proper coloring where one is guaranteed to exist."""


class BadK(ChromospanError):
    pass


class BadN(ChromospanError):
    pass


class BudgetExceeded(ChromospanError):
    pass


class ParseError(ChromospanError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
