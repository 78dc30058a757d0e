"""Errors raised by the theorem verifiers."""

from __future__ import annotations


class VerificationError(Exception):
    """Base class for verifier failures (bad requests, not failed statements)."""


class UnknownTheoremError(VerificationError, KeyError):
    def __init__(self, name: str, known: tuple[str, ...]) -> None:
        super().__init__(f"unknown statement {name!r} (known: {', '.join(known)})")
        self.name = name
        self.known = known

    def __str__(self) -> str:
        return str(self.args[0])


class RangeError(VerificationError, ValueError):
    """Raised for an empty, reversed or out-of-domain index range."""


class UnsupportedMethodError(VerificationError, ValueError):
    """Raised when a statement has no decision path of the requested kind."""
