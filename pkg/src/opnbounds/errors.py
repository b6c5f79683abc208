"""Exceptions shared across the package."""


class BudgetExceeded(Exception):
    """Raised when a configurable work budget runs out before an operation
    completes.  The operation never returns a partial answer instead."""


class InvalidInput(ValueError):
    """Raised when an argument falls outside an operation's domain."""
