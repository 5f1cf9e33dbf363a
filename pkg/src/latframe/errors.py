class BudgetExceeded(RuntimeError):
    """A computation would exceed its configured size or node budget."""


class UnsupportedError(ValueError):
    """The operation is not defined for this kind of input."""


class ConsistencyError(AssertionError):
    """A construction failed its own post-condition check."""
