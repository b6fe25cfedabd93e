"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """An enumeration or cell budget would be exceeded.

    Raised before starting work that would blow past the configured
    limit, so callers never get a partial answer.
    """
