"""Exceptions shared across the package."""


class BudgetExceeded(RuntimeError):
    """Raised when a search runs past its node budget; callers report 'inconclusive'."""


class Inapplicable(ValueError):
    """A check's hypothesis does not hold for the given input (distinct from the check failing)."""


class ConstructionError(RuntimeError):
    """A transformation guaranteed by theory could not be carried out; always a bug or a refutation."""
