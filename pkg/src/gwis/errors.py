"""Exception types shared across the package."""

from __future__ import annotations


class GwisError(Exception):
    """Base class for all errors raised by this package."""


class InputError(GwisError):
    """A caller violated an operation's contract (bad vertex, bad set, bad value)."""


class CapacityError(GwisError):
    """An exhaustive routine was asked to exceed its configured cap."""


class FormatError(InputError):
    """A text document failed to parse; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
