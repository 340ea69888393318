"""Exception types raised across the package."""


class UnckmError(Exception):
    """Base class for all errors raised by this package."""


class ContractViolation(UnckmError, ValueError):
    """An argument broke a documented precondition."""


class ParseError(UnckmError, ValueError):
    """A delimited input file could not be parsed.

    Attributes:
        row: 1-based row number of the offending line (None if not row-specific).
    """

    def __init__(self, message: str, row: int | None = None):
        self.row = row
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)


class EmptyDataset(UnckmError, ValueError):
    pass


class DimensionError(UnckmError, ValueError):
    pass


class EmptyCluster(UnckmError, ValueError):
    pass


class AssignmentError(UnckmError, ValueError):
    pass


class InsufficientDistinctPoints(UnckmError, ValueError):
    """k exceeds the number of distinct positions in the dataset."""
