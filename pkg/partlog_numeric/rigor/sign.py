"""Certified sign determination with adaptive precision escalation."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, NamedTuple

from .interval import Interval

logger = logging.getLogger(__name__)

__all__ = [
    "DEFAULT_POLICY",
    "PrecisionPolicy",
    "Sign",
    "SignCertificate",
    "certify_sign",
    "exact_sign",
]


class Sign(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    ZERO = "zero"
    INDETERMINATE = "indeterminate"

    @property
    def is_certified(self) -> bool:
        return self is not Sign.INDETERMINATE


@dataclass(frozen=True)
class PrecisionPolicy:
    """Escalation schedule ``initial_bits, initial_bits * factor, ...`` capped at ``max_bits``."""

    initial_bits: int = 96
    max_bits: int = 16384
    escalation_factor: int = 2

    def __post_init__(self) -> None:
        if self.initial_bits < 2:
            raise ValueError(f"initial_bits must be at least 2, got {self.initial_bits}")
        if self.max_bits < self.initial_bits:
            raise ValueError(f"initial_bits ({self.initial_bits}) exceeds max_bits ({self.max_bits})")
        if self.escalation_factor < 2:
            raise ValueError(f"escalation_factor must be at least 2, got {self.escalation_factor}")

    def schedule(self) -> tuple[int, ...]:
        steps = [self.initial_bits]
        while steps[-1] < self.max_bits:
            steps.append(min(steps[-1] * self.escalation_factor, self.max_bits))
        return tuple(steps)


DEFAULT_POLICY = PrecisionPolicy()


class SignCertificate(NamedTuple):
    sign: Sign
    bits: int


def certify_sign(expr: Callable[[int], Interval], policy: PrecisionPolicy = DEFAULT_POLICY) -> SignCertificate:
    """Evaluate ``expr`` along the policy schedule until its enclosure excludes zero.

    Interval evaluation can never prove a value is exactly zero, so a true zero
    always ends as ``Sign.INDETERMINATE`` at ``policy.max_bits``.
    """

    bits = policy.initial_bits
    for bits in policy.schedule():
        enclosure = expr(bits)
        if enclosure.is_positive():
            return SignCertificate(Sign.POSITIVE, bits)
        if enclosure.is_negative():
            return SignCertificate(Sign.NEGATIVE, bits)
        logger.debug("sign undecided at %d bits, width %s", bits, enclosure.format_width())
    return SignCertificate(Sign.INDETERMINATE, bits)


def exact_sign(value: int | Fraction) -> Sign:
    if value > 0:
        return Sign.POSITIVE
    if value < 0:
        return Sign.NEGATIVE
    return Sign.ZERO
