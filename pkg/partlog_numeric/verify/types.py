"""Identifiers, verdicts and the JSON-serialisable verification report."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable, NamedTuple

from partlog_numeric.rigor import Sign

__all__ = [
    "AuxInequalityId",
    "TheoremId",
    "Verdict",
    "VerificationMethod",
    "VerificationReport",
    "VerificationStatus",
]


class TheoremId(str, Enum):
    LOG_CONCAVITY = "log-concavity"
    CHEN = "chen"
    DP_CONJECTURE = "dp-conjecture"
    R_LOG_CONVEX = "r-log-convex"
    NTHROOT_LOG_CONVEX = "nthroot-log-convex"
    RATIO_INEQUALITY = "ratio-ineq"
    DELTA3_POSITIVE = "delta3-positive"
    NTHROOT_DECREASING = "nthroot-decreasing"
    LOG_T_SANDWICH = "lemma22-sandwich"
    ERROR_ENVELOPE = "lemma23-error"
    C_POSITIVE = "c-positive"
    D_POSITIVE = "d-positive"
    DP_UPPER = "dp-upper"
    CWX_UPPER = "cwx-upper"
    NTHROOT_RATIO_UPPER = "thm32-upper"
    C_SURROGATE = "c-surrogate"
    NTHROOT_RATIO_MAJORANT = "thm32-claim"
    DP_RELAXED = "dp-relaxed"


class AuxInequalityId(str, Enum):
    MU_SHIFT = "mu-shift"
    MU_UPPER = "mu-upper"
    X_SERIES = "x-series"
    LOG_QUARTER_POWER = "log-quarter-power"
    EXP_POLY = "exp-poly"
    CUBE_GAP = "cube-gap"
    FRACTION_SUM = "fraction-sum"
    EXP_DECAY = "exp-decay"
    Y_DECAY = "y-decay"
    LOG_MU_18 = "log-mu-18"
    RATIO_GAP = "ratio-gap"


class VerificationStatus(str, Enum):
    VERIFIED = "verified"
    FAILED = "failed"
    INDETERMINATE = "indeterminate"


class VerificationMethod(str, Enum):
    EXACT = "exact"
    INTERVAL = "interval"


class Verdict(NamedTuple):
    """Decision at one index; ``bits`` is 0 on the exact path."""

    n: int
    sign: Sign
    bits: int

    @property
    def holds(self) -> bool:
        return self.sign is Sign.POSITIVE

    @property
    def failed(self) -> bool:
        return self.sign in (Sign.NEGATIVE, Sign.ZERO)


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    from_n: int
    to_n: int
    status: VerificationStatus
    failures: tuple[int, ...] = ()
    indeterminates: tuple[int, ...] = ()
    max_bits_used: int = 0
    wall_time_ms: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        if self.from_n > self.to_n:
            raise ValueError(f"report range is reversed: {self.from_n} > {self.to_n}")
        expected = _status_for(self.failures, self.indeterminates)
        if self.status is not expected:
            raise ValueError(f"status {self.status.value} contradicts the recorded verdicts ({expected.value})")

    @classmethod
    def from_verdicts(
        cls,
        theorem: str,
        from_n: int,
        to_n: int,
        verdicts: Iterable[Verdict],
        wall_time_ms: int = 0,
    ) -> "VerificationReport":
        failures: list[int] = []
        indeterminates: list[int] = []
        max_bits = 0
        for verdict in verdicts:
            max_bits = max(max_bits, verdict.bits)
            if verdict.failed:
                failures.append(verdict.n)
            elif not verdict.holds:
                indeterminates.append(verdict.n)
        return cls(
            theorem=theorem,
            from_n=from_n,
            to_n=to_n,
            status=_status_for(failures, indeterminates),
            failures=tuple(failures),
            indeterminates=tuple(indeterminates),
            max_bits_used=max_bits,
            wall_time_ms=wall_time_ms,
        )

    @property
    def exit_code(self) -> int:
        if self.failures:
            return 1
        if self.indeterminates:
            return 2
        return 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "theorem": self.theorem,
            "from": self.from_n,
            "to": self.to_n,
            "status": self.status.value,
            "failures": list(self.failures),
            "indeterminates": list(self.indeterminates),
            "max_bits_used": self.max_bits_used,
            "wall_time_ms": self.wall_time_ms,
        }

    @classmethod
    def from_dict(cls, payload: dict[str, Any]) -> "VerificationReport":
        try:
            return cls(
                theorem=str(payload["theorem"]),
                from_n=int(payload["from"]),
                to_n=int(payload["to"]),
                status=VerificationStatus(payload["status"]),
                failures=tuple(int(n) for n in payload["failures"]),
                indeterminates=tuple(int(n) for n in payload["indeterminates"]),
                max_bits_used=int(payload["max_bits_used"]),
                wall_time_ms=int(payload.get("wall_time_ms", 0)),
            )
        except KeyError as exc:
            raise ValueError(f"report payload is missing {exc.args[0]!r}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _status_for(failures: Iterable[int], indeterminates: Iterable[int]) -> VerificationStatus:
    if any(True for _ in failures):
        return VerificationStatus.FAILED
    if any(True for _ in indeterminates):
        return VerificationStatus.INDETERMINATE
    return VerificationStatus.VERIFIED
