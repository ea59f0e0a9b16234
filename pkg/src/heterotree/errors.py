"""Exception hierarchy shared by every module."""


class HeterotreeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(HeterotreeError, ValueError):
    """Malformed graph, tree, or parameters."""


class InvalidEdgeSetError(InvalidInputError):
    """An edge set refers to an index outside the host graph."""


class BudgetExceededError(HeterotreeError):
    """An exhaustive search would exceed its configured budget."""

    def __init__(self, message: str, search_space: int | None = None):
        super().__init__(message)
        self.search_space = search_space


class ConsistencyError(HeterotreeError, RuntimeError):
    """A guaranteed object was not produced; indicates a bug."""
