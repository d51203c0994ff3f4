"""Exception hierarchy shared by every activerank module."""


class ActiveRankError(Exception):
    """Base class for all library errors."""


class DegeneratePairError(ActiveRankError, ValueError):
    """Two objects occupy the same location, so no bisector exists."""


class TieError(ActiveRankError, ValueError):
    """A reference point is equidistant from the two objects of a query."""


class NumericalFailure(ActiveRankError, RuntimeError):
    """The LP backend did not return an optimal solution."""

    def __init__(self, message, constraint_count):
        super().__init__(f"{message} (constraints held: {constraint_count})")
        self.constraint_count = constraint_count


class ContractError(ActiveRankError):
    """A caller violated a documented precondition."""


class InconsistencyError(ActiveRankError):
    """The stored labels admit no reference point."""


class FormatError(ActiveRankError, ValueError):
    """An input file or matrix does not conform to the expected layout."""


class SessionAborted(ActiveRankError):
    """An interactive session ended before the ranking was complete."""
