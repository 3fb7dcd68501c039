"""Exception types shared across the package."""

from __future__ import annotations


class TreeFppError(Exception):
    """Base class for all package errors."""


class PermutationParseError(TreeFppError, ValueError):
    """Malformed permutation text; ``position`` is the 0-based offending offset."""

    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} (at position {position} in {text!r})"
        super().__init__(message)


class DegreeError(TreeFppError, ValueError):
    """Permutations of different degrees, or a degree outside a supported bound."""


class BudgetExceeded(TreeFppError):
    """An enumeration or exact-integer budget would be exceeded."""


class PreconditionError(TreeFppError, ValueError):
    """A mathematical precondition on the inputs does not hold."""


class TrivialSubgroupError(PreconditionError):
    pass


class NotSubgroupError(PreconditionError):
    pass


class NotNormalError(PreconditionError):
    pass


class NotAGroupError(PreconditionError):
    pass
