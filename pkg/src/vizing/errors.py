"""Exception hierarchy shared by all modules."""


class VizingError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(VizingError, ValueError):
    """An argument is out of range or structurally invalid."""


class ParseError(InvalidInputError):
    """A graph file could not be decoded.

    ``offset`` is the byte offset (graph6) or line number (edge list / corpus)
    of the offending input, when known.
    """

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


class CapExceededError(InvalidInputError):
    """An input is larger than a documented size cap."""


class PreconditionError(VizingError):
    """A mathematical precondition (e.g. the order condition) does not hold."""


class BudgetExceededError(VizingError, RuntimeError):
    """The branch-and-bound search hit its node budget."""

    def __init__(self, budget, label=None):
        where = f" while solving {label}" if label else ""
        super().__init__(f"budget exceeded: more than {budget} search nodes{where}")
        self.budget = budget
        self.label = label
