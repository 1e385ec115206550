"""Exception hierarchy shared across the package."""


class OddFlipError(Exception):
    """Base class for all errors raised by oddflip."""


class FormatError(OddFlipError, ValueError):
    """Malformed text input. ``line`` is 1-based, or None when not line-specific."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphError(OddFlipError, ValueError):
    pass


class MatchingError(OddFlipError, ValueError):
    pass


class IllegalFlip(MatchingError):
    """A flip target is not adjacent to the isolated vertex.

    ``index`` is the position of the offending step when replaying a sequence.
    """

    def __init__(self, message, index=None):
        self.index = index
        super().__init__(message)


class SearchError(OddFlipError):
    pass


class SearchCapExceeded(SearchError):
    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"search exceeded the cap of {cap} expanded states")


class BudgetExceeded(SearchError):
    """The flip distance is larger than the requested budget."""

    def __init__(self, budget, nodes_expanded=0):
        self.budget = budget
        self.nodes_expanded = nodes_expanded
        super().__init__(f"flip distance exceeds budget {budget}")


class DisconnectedFlipGraph(SearchError):
    def __init__(self, first, second):
        self.pair = (first, second)
        super().__init__(
            f"flip graph is disconnected: no flip sequence from {first} to {second}")


class ReductionError(OddFlipError, ValueError):
    pass


class OracleError(OddFlipError, ValueError):
    pass
