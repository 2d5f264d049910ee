"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """Raised when a text form of a scalar, polynomial, skein element or
    generator word does not conform to its grammar.  Carries the character
    position of the offending token when known."""

    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class RankMismatchError(ValueError):
    """Raised when a binary operation mixes values with different numbers of
    variables / strands.  There is deliberately no broadcasting."""


class NonDivisibleError(ArithmeticError):
    """Raised by exact division when the dividend is not a multiple of the
    divisor.  Seeing this on an input of the form (swap - 1)f indicates a bug
    in the caller's arithmetic, not a property of the input."""
