"""Exception hierarchy shared by every module."""

from __future__ import annotations


class IasiError(Exception):
    """Base class for all library errors."""


class DomainError(IasiError):
    """Input violates a documented precondition (bad parameter, missing edge,
    non-bipartite graph where bipartiteness is required, and so on).

    The message always names the violated condition.
    """


class BudgetExceededError(IasiError):
    """A bounded computation refused to start or continue because its stated
    budget or cap would be exceeded.  Never raised mid-way with a partial
    answer."""


class OffsetOverflowError(IasiError):
    """A label constructor's offset schedule would exceed the configured
    maximum element; raised instead of emitting enormous integers."""


class InternalCheckError(IasiError):
    """Two supposedly-equivalent criteria disagreed.  Indicates a bug in this
    library, not in the caller's input."""
