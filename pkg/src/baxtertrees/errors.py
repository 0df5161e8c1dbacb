"""Shared exception types.

Parse errors carry a position so the CLI can point at the offending
character; domain errors signal structurally well-formed input that is
invalid for the requested operation (wrong family, wrong root label, a
path outside its class, and so on).
"""

from __future__ import annotations

__all__ = ["ParseError", "DomainError"]


class ParseError(ValueError):
    """Malformed textual input (tree, polynomial, path, or word)."""

    def __init__(self, message: str, text: str = "", pos: int | None = None):
        if pos is not None:
            message = f"{message} (at position {pos}: {text[pos:pos + 12]!r})"
        super().__init__(message)
        self.text = text
        self.pos = pos


class DomainError(ValueError):
    """Input is outside the domain of the requested operation."""
