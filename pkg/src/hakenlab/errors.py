"""Exception hierarchy shared by every hakenlab module."""

from __future__ import annotations


class HakenlabError(Exception):
    """Base class for all library errors."""


class MixedRadicals(HakenlabError):
    """Two different square roots met in one computation."""


class IrrationalSpectrum(HakenlabError):
    """Eigenvalues need a square root that is not available in the active field."""


class NotHyperbolic(HakenlabError):
    pass


class RelationViolated(HakenlabError):
    """The product of commutators is not +-identity."""

    def __init__(self, message: str, residual=None):
        super().__init__(message)
        self.residual = residual


class NotAKnot(HakenlabError):
    pass


class PresentationMismatch(HakenlabError):
    """Cover presentation disagrees with the Fox resultant; always a bug."""


class MissingData(HakenlabError):
    pass


class InfiniteModule(HakenlabError):
    pass


class WrongComponentCount(HakenlabError):
    pass


class DimensionMismatch(HakenlabError):
    pass


class ParseError(HakenlabError):
    """Malformed input; carries a 1-based line/column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column
