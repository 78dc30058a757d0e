"""Directed-rounding interval arithmetic and certified sign decisions."""

from __future__ import annotations

from .constants import CONSTANT_NAMES, iv_const
from .errors import DomainError, PrecisionExhaustedError, RigorError, UnknownConstantError, UnknownOperationError
from .interval import GUARD_BITS, OPERATIONS, Interval, format_upward, iv_apply
from .sign import DEFAULT_POLICY, PrecisionPolicy, Sign, SignCertificate, certify_sign, exact_sign

__all__ = [
    "CONSTANT_NAMES",
    "DEFAULT_POLICY",
    "DomainError",
    "GUARD_BITS",
    "Interval",
    "OPERATIONS",
    "PrecisionExhaustedError",
    "PrecisionPolicy",
    "RigorError",
    "Sign",
    "SignCertificate",
    "UnknownConstantError",
    "UnknownOperationError",
    "certify_sign",
    "exact_sign",
    "format_upward",
    "iv_apply",
    "iv_const",
]
