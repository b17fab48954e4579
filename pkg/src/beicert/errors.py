"""Shared exception types.

Precondition violations raise InputError; configurable resource limits
raise BudgetExceeded.  The CLI maps both to a machine-readable error
object and exit code 1.
"""


class InputError(ValueError):
    """A caller-supplied value violates a documented precondition."""


class BudgetExceeded(RuntimeError):
    """A computation hit an explicit resource budget before finishing."""
