"""Error types shared by every gorfro module."""

from __future__ import annotations

from typing import Optional


class GorfroError(RuntimeError):
    """Base class for gorfro failures with stable error codes."""

    def __init__(self, code: str, message: str, *, pointer: Optional[str] = None) -> None:
        self.code = code
        self.message = message
        self.pointer = pointer or "/"
        super().__init__(f"[{code}] {message} at {self.pointer}")


class InputError(GorfroError):
    """Raised when caller-supplied data (ideal, weight, flags) is malformed."""


class InternalCheckError(GorfroError):
    """Raised when an internal consistency check fails; always signals a bug or a too-small range."""


class ResourceLimitError(GorfroError):
    """Raised when a computation exceeds its time or size budget."""
