"""Errors raised by the interval arithmetic substrate."""

from __future__ import annotations


class RigorError(Exception):
    """Base class for interval arithmetic errors."""


class DomainError(RigorError, ValueError):
    """Raised when an operand interval touches a singularity of the operation."""

    def __init__(self, op: str, detail: str) -> None:
        super().__init__(f"{op}: {detail}")
        self.op = op
        self.detail = detail


class UnknownConstantError(RigorError, KeyError):
    """Raised for a constant name outside the supported table."""

    def __init__(self, name: str, known: tuple[str, ...]) -> None:
        super().__init__(f"unknown constant {name!r} (known: {', '.join(known)})")
        self.name = name
        self.known = known

    def __str__(self) -> str:
        return str(self.args[0])


class UnknownOperationError(RigorError, ValueError):
    """Raised when ``iv_apply`` is asked for an unsupported operation."""


class PrecisionExhaustedError(RigorError):
    """Raised when a computation needs more bits than the policy allows."""

    def __init__(self, max_bits: int, what: str) -> None:
        super().__init__(f"{what}: precision budget of {max_bits} bits exhausted")
        self.max_bits = max_bits
        self.what = what
