"""Closed-form bound functions used by the log-convexity arguments.

Every formula is transcribed term by term, keeping the (24n+23) / (24n-25)
shifts exactly as stated; none are simplified algebraically.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from partlog_numeric.hrr import mu_at
from partlog_numeric.rigor import Interval, iv_const
from partlog_numeric.rigor.interval import GUARD_BITS

logger = logging.getLogger(__name__)

__all__ = [
    "BoundEvaluation",
    "ReferenceBounds",
    "bound_bundle",
    "c_lower",
    "c_surrogate",
    "cwx_upper",
    "d_lower",
    "dp_relaxed_upper",
    "dp_upper",
    "error_envelope",
    "f_component",
    "f_second_derivative",
    "reference_bounds",
    "sandwich_bounds",
    "thm32_majorant",
    "thm32_upper",
]


def _require(n: int, minimum: int) -> None:
    if n < minimum:
        raise ValueError(f"index must be >= {minimum}, got {n}")


def _int(value: int, wp: int) -> Interval:
    return Interval.from_int(value, wp)


def _three_halves(value: int, wp: int) -> Interval:
    # value^(3/2)
    return _int(value, wp) * _int(value, wp).sqrt()


# ---------- f_i and their second derivatives ----------


def f_component(i: int, n: int, bits: int) -> Interval:
    """f_1 = mu/n, f_2 = -3 log mu / n, f_3 = log(mu - 1) / n, f_4 = log d / n."""

    if i not in (1, 2, 3, 4):
        raise ValueError(f"component index must be in 1..4, got {i}")
    _require(n, 1)
    wp = bits + GUARD_BITS
    m = mu_at(n, wp)
    if i == 1:
        value = m / n
    elif i == 2:
        value = -3 * m.log() / n
    elif i == 3:
        value = (m - 1).log() / n
    else:
        value = iv_const("d", wp).log() / n
    return value.rounded(bits)


def _f1_second(n: int, wp: int) -> Interval:
    pi = iv_const("pi", wp)
    s3 = _three_halves(24 * n - 1, wp)
    return 72 * pi / (n * s3) - 12 * pi / (n * n * s3) + pi / (3 * n**3 * s3)


def _f2_second(n: int, wp: int) -> Interval:
    m = mu_at(n, wp)
    return -6 * m.log() / n**3 + Fraction(72, (24 * n - 1) * n * n) + Fraction(864, n * (24 * n - 1) ** 2)


def _f3_second(n: int, wp: int) -> Interval:
    pi = iv_const("pi", wp)
    m1 = mu_at(n, wp) - 1
    root = _int(24 * n - 1, wp).sqrt()
    return (
        -4 * pi * pi / (m1 * m1 * ((24 * n - 1) * n))
        + 2 * m1.log() / n**3
        - 4 * pi / (m1 * root * (n * n))
        - 24 * pi / (m1 * _three_halves(24 * n - 1, wp) * n)
    )


def _f4_second(n: int, wp: int) -> Interval:
    return 2 * iv_const("d", wp).log() / n**3


_SECOND_DERIVATIVES = {1: _f1_second, 2: _f2_second, 3: _f3_second, 4: _f4_second}


def f_second_derivative(i: int, n: int, bits: int) -> Interval:
    """f_i''(n) for the four-way split of log T~(n) / n."""

    if i not in _SECOND_DERIVATIVES:
        raise ValueError(f"component index must be in 1..4, got {i}")
    _require(n, 1)
    return _SECOND_DERIVATIVES[i](n, bits + GUARD_BITS).rounded(bits)


# ---------- brackets, envelope, positivity surrogates ----------


def _b1(n: int, wp: int) -> Interval:
    pi = iv_const("pi", wp)
    return 72 * pi / ((n + 1) * _three_halves(24 * n + 23, wp)) - 4 * mu_at(n - 1, wp).log() / (n - 1) ** 3


def _b2(n: int, wp: int) -> Interval:
    pi = iv_const("pi", wp)
    return (
        72 * pi / ((n - 1) * _three_halves(24 * n - 25, wp))
        - 4 * mu_at(n + 1, wp).log() / (n + 1) ** 3
        + Fraction(5, (n - 1) ** 3)
    )


def sandwich_bounds(n: int, bits: int) -> tuple[Interval, Interval]:
    """(B_1(n), B_2(n)), the brackets of the second difference of log T~(k) / k at centre n."""

    _require(n, 2)
    wp = bits + GUARD_BITS
    return _b1(n, wp).rounded(bits), _b2(n, wp).rounded(bits)


def _envelope(n: int, wp: int) -> Interval:
    pi = iv_const("pi", wp)
    return 5 / (pi * _int(24 * n - 25, wp).sqrt() / 18).exp() / (n - 1)


def error_envelope(n: int, bits: int) -> Interval:
    """(5 / (n-1)) e^(-pi sqrt(24n - 25) / 18)."""

    _require(n, 2)
    return _envelope(n, bits + GUARD_BITS).rounded(bits)


def _c(n: int, wp: int) -> Interval:
    pi = iv_const("pi", wp)
    log_d = iv_const("d", wp).log()
    return (
        2 * (1 + log_d) / (n - 1) ** 3
        - 12 * pi / ((n + 1) ** 2 * _three_halves(24 * n + 23, wp))
        - 12 * (mu_at(n + 1, wp) - 1).log() / (n - 1) ** 4
    )


def c_lower(n: int, bits: int) -> Interval:
    """C(n): 2(1 + log d)/(n-1)^3 - 12 pi/((n+1)^2 (24n+23)^(3/2)) - 12 log(mu(n+1) - 1)/(n-1)^4."""

    _require(n, 2)
    return _c(n, bits + GUARD_BITS).rounded(bits)


def _d(n: int, wp: int) -> Interval:
    log_shift = _int(n - 1, wp).log()
    return (
        _b1(n, wp)
        - 2 * log_shift / (n - 1) ** 3
        + Fraction(3, (n - 1) ** 3)
        - _envelope(n, wp)
    )


def d_lower(n: int, bits: int) -> Interval:
    """D(n) = B_1(n) - 2 log(n-1)/(n-1)^3 + 3/(n-1)^3 - envelope(n)."""

    _require(n, 2)
    return _d(n, bits + GUARD_BITS).rounded(bits)


def c_surrogate(n: int, bits: int) -> Interval:
    """Closed-form lower bound 2(1 + log d)/(n-1)^3 - (3 + 1/48) sqrt(24) pi/(n-1)^(7/2) of C(n)."""

    _require(n, 2)
    wp = bits + GUARD_BITS
    pi = iv_const("pi", wp)
    log_d = iv_const("d", wp).log()
    shift = n - 1
    value = 2 * (1 + log_d) / shift**3 - Fraction(145, 48) * iv_const("sqrt24", wp) * pi / (
        shift**3 * _int(shift, wp).sqrt()
    )
    return value.rounded(bits)


# ---------- reference upper bounds ----------


def _cwx(n: int, wp: int) -> Interval:
    q = 24 * iv_const("pi", wp) / _three_halves(24 * n, wp)
    return q - q * q


def _exp_tail(n: int, wp: int) -> Interval:
    # 2 e^(-(pi/10) sqrt(2n/3))
    root = Interval.from_rational(2 * n, 3, wp).sqrt()
    return 2 / (iv_const("pi", wp) / 10 * root).exp()


def _dp(n: int, wp: int) -> Interval:
    pi = iv_const("pi", wp)
    shifted = 24 * (n - 1) - 1
    s3 = _three_halves(shifted, wp)
    pi_root = pi * _int(shifted, wp).sqrt()
    return (
        24 * pi / s3
        + 288 * pi * (pi_root - 3) / (s3 * (pi_root - 6) ** 2)
        - Fraction(864, (24 * (n + 1) - 1) ** 2)
        + _exp_tail(n, wp)
    )


def _thm32(n: int, wp: int) -> Interval:
    three_pi = 3 * iv_const("pi", wp)
    n_five_halves = _int(n, wp) ** 2 * _int(n, wp).sqrt()
    return three_pi / (iv_const("sqrt24", wp) * n_five_halves + three_pi)


def dp_upper(n: int, bits: int) -> Interval:
    _require(n, 2)
    return _dp(n, bits + GUARD_BITS).rounded(bits)


def cwx_upper(n: int, bits: int) -> Interval:
    _require(n, 2)
    return _cwx(n, bits + GUARD_BITS).rounded(bits)


def thm32_upper(n: int, bits: int) -> Interval:
    """3 pi / (sqrt(24) n^(5/2) + 3 pi)."""
    _require(n, 1)
    return _thm32(n, bits + GUARD_BITS).rounded(bits)


class ReferenceBounds(NamedTuple):
    dp_upper: Interval
    cwx_upper: Interval
    thm32_upper: Interval


def reference_bounds(n: int, bits: int) -> ReferenceBounds:
    """The two upper bounds on -Δ² log p(n-1) and the upper bound on Δ² log p(n-1)^(1/(n-1))."""

    _require(n, 2)
    wp = bits + GUARD_BITS
    return ReferenceBounds(
        dp_upper=_dp(n, wp).rounded(bits),
        cwx_upper=_cwx(n, wp).rounded(bits),
        thm32_upper=_thm32(n, wp).rounded(bits),
    )


def dp_relaxed_upper(n: int, bits: int) -> Interval:
    """Relaxed form q - q^2 - 1/n^2 + 3/n^(5/2) + 2 e^(-(pi/10) sqrt(2n/3)), q = 24 pi/(24n)^(3/2)."""

    _require(n, 2)
    wp = bits + GUARD_BITS
    n_five_halves = _int(n, wp) ** 2 * _int(n, wp).sqrt()
    value = _cwx(n, wp) - Fraction(1, n * n) + 3 / n_five_halves + _exp_tail(n, wp)
    return value.rounded(bits)


def thm32_majorant(n: int, bits: int) -> Interval:
    """B_2(n) + envelope(n), the closed-form upper bound compared against the reference bound."""

    _require(n, 2)
    wp = bits + GUARD_BITS
    return (_b2(n, wp) + _envelope(n, wp)).rounded(bits)


@dataclass(frozen=True)
class BoundEvaluation:
    n: int
    bits: int
    b1: Interval
    b2: Interval
    e_env: Interval
    c_val: Interval
    d_val: Interval
    dp_upper: Interval
    cwx_upper: Interval
    thm32_upper: Interval

    def fields(self) -> dict[str, Interval]:
        return {
            "b1": self.b1,
            "b2": self.b2,
            "e_env": self.e_env,
            "c_val": self.c_val,
            "d_val": self.d_val,
            "dp_upper": self.dp_upper,
            "cwx_upper": self.cwx_upper,
            "thm32_upper": self.thm32_upper,
        }


def bound_bundle(n: int, bits: int) -> BoundEvaluation:
    _require(n, 2)
    b1, b2 = sandwich_bounds(n, bits)
    references = reference_bounds(n, bits)
    return BoundEvaluation(
        n=n,
        bits=bits,
        b1=b1,
        b2=b2,
        e_env=error_envelope(n, bits),
        c_val=c_lower(n, bits),
        d_val=d_lower(n, bits),
        dp_upper=references.dp_upper,
        cwx_upper=references.cwx_upper,
        thm32_upper=references.thm32_upper,
    )
