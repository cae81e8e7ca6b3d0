"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed ideal expression.  ``offset`` is the byte position in the input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class NotArtinianError(ValueError):
    """An operation that needs a finite-dimensional quotient got one that is not."""


class NotTypeTwoError(ValueError):
    """A type-2 classification was requested for an algebra of a different type."""


class HypothesisError(ValueError):
    """Parameters fall outside the admissible range of a closed-form enumeration."""


class ExactnessError(ArithmeticError):
    """An integer quotient that must be exact was not.

    This always indicates either a bug or a hypothesis breach upstream; it is
    never a legitimate runtime result.
    """


class InternalCheckError(AssertionError):
    """Two quantities the theory forces to be equal disagreed at runtime."""
