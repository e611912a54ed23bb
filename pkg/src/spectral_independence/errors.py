"""Exception types shared across the package.

The CLI maps these onto exit codes: ``Refusal`` -> 1, ``ParseError`` -> 2.
"""

from __future__ import annotations


class Refusal(ValueError):
    """A computation was refused because a mathematical hypothesis fails.

    The message names the hypothesis that was violated.
    """


class ParseError(ValueError):
    """Malformed edge-list or hyperedge-list input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InputError(ValueError):
    """Numerically invalid input (non-finite entries, asymmetric matrix, bad shape)."""
