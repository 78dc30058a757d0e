"""Directed-rounding real intervals over mpmath's raw binary floats.

Every endpoint is a raw ``mpmath.libmp`` tuple rounded outward: lower
endpoints toward -inf, upper endpoints toward +inf. The libmp primitives are
pure functions of (operands, precision, rounding mode) so intervals are safe to
share between threads and to pickle into worker processes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Union

from mpmath import mp
from mpmath.libmp import (
    fone,
    from_int,
    from_rational,
    fzero,
    mpf_add,
    mpf_cmp,
    mpf_div,
    mpf_exp,
    mpf_log,
    mpf_mul,
    mpf_neg,
    mpf_nthroot,
    mpf_perturb,
    mpf_pos,
    mpf_pow_int,
    mpf_shift,
    mpf_sqrt,
    mpf_sub,
    prec_to_dps,
    round_ceiling,
    round_floor,
    round_nearest,
    to_rational,
    to_str,
)

from .errors import DomainError, UnknownOperationError

logger = logging.getLogger(__name__)

__all__ = ["GUARD_BITS", "OPERATIONS", "Interval", "Operand", "format_upward", "iv_apply", "pad_down", "pad_up"]

# Extra bits used for transcendental evaluation before the outward padding.
GUARD_BITS = 16

RawFloat = tuple
Operand = Union["Interval", int, Fraction]


def _is_zero(raw: RawFloat) -> bool:
    return mpf_cmp(raw, fzero) == 0


def pad_down(raw: RawFloat, bits: int) -> RawFloat:
    return mpf_perturb(raw, 1, bits, round_floor)


def pad_up(raw: RawFloat, bits: int) -> RawFloat:
    return mpf_perturb(raw, 0, bits, round_ceiling)


def _to_fraction(raw: RawFloat) -> Fraction:
    num, den = to_rational(raw)
    return Fraction(int(num), int(den))


def _directed_decimal(value: Fraction, digits: int, *, upward: bool) -> str:
    """Scientific decimal with ``digits`` significant digits rounded toward +/-inf."""

    if value == 0:
        return "0"
    negative = value < 0
    magnitude = -value if negative else value
    exponent = len(str(magnitude.numerator)) - len(str(magnitude.denominator))
    if magnitude < Fraction(10) ** exponent:
        exponent -= 1
    elif magnitude >= Fraction(10) ** (exponent + 1):
        exponent += 1
    shift = digits - 1 - exponent
    scaled = magnitude * Fraction(10) ** shift
    # rounding the magnitude up moves a negative value down
    magnitude_up = upward != negative
    mantissa = -((-scaled.numerator) // scaled.denominator) if magnitude_up else scaled.numerator // scaled.denominator
    text = str(mantissa)
    exponent = len(text) - 1 - shift
    body = text[0] + ("." + text[1:].rstrip("0") if text[1:].rstrip("0") else "")
    return f"{'-' if negative else ''}{body}e{exponent:+d}"


def format_upward(value: Any, digits: int = 6) -> str:
    """Decimal text of an mpf rounded toward +inf, for one-sided bounds such as deviations."""
    return _directed_decimal(_to_fraction(value._mpf_), digits, upward=True)


@dataclass(frozen=True)
class Interval:
    """Closed real enclosure ``[lower, upper]`` evaluated at ``bits`` of precision."""

    lower: RawFloat
    upper: RawFloat
    bits: int

    def __post_init__(self) -> None:
        if self.bits < 2:
            raise ValueError(f"precision must be at least 2 bits, got {self.bits}")
        if mpf_cmp(self.lower, self.upper) > 0:
            raise ValueError("lower endpoint exceeds upper endpoint")

    # ---------- constructors ----------

    @classmethod
    def from_int(cls, value: int, bits: int) -> "Interval":
        return cls(from_int(value, bits, round_floor), from_int(value, bits, round_ceiling), bits)

    @classmethod
    def from_rational(cls, numerator: int, denominator: int, bits: int) -> "Interval":
        if denominator == 0:
            raise DomainError("from_rational", "zero denominator")
        if denominator < 0:
            numerator, denominator = -numerator, -denominator
        return cls(
            from_rational(numerator, denominator, bits, round_floor),
            from_rational(numerator, denominator, bits, round_ceiling),
            bits,
        )

    @classmethod
    def from_fraction(cls, value: Fraction, bits: int) -> "Interval":
        return cls.from_rational(value.numerator, value.denominator, bits)

    @classmethod
    def coerce(cls, value: Operand, bits: int) -> "Interval":
        if isinstance(value, Interval):
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not interval operands")
        if isinstance(value, int):
            return cls.from_int(value, bits)
        if isinstance(value, Fraction):
            return cls.from_fraction(value, bits)
        raise TypeError(f"cannot use {type(value).__name__} as an interval operand")

    # ---------- endpoint views ----------

    @property
    def lo(self) -> Any:
        return mp.make_mpf(self.lower)

    @property
    def hi(self) -> Any:
        return mp.make_mpf(self.upper)

    def lower_fraction(self) -> Fraction:
        return _to_fraction(self.lower)

    def upper_fraction(self) -> Fraction:
        return _to_fraction(self.upper)

    def width(self) -> Any:
        """Upper bound on ``hi - lo``."""
        return mp.make_mpf(mpf_sub(self.upper, self.lower, self.bits, round_ceiling))

    def mid(self) -> Any:
        return mp.make_mpf(mpf_shift(mpf_add(self.lower, self.upper), -1))

    def abs_upper(self) -> Any:
        """Upper bound on ``|x|`` over the interval."""
        upper = self.upper if mpf_cmp(self.upper, fzero) > 0 else fzero
        lower = mpf_neg(self.lower) if mpf_cmp(self.lower, fzero) < 0 else fzero
        return mp.make_mpf(upper if mpf_cmp(upper, lower) >= 0 else lower)

    def contains(self, value: int | Fraction) -> bool:
        exact = Fraction(value)
        return self.lower_fraction() <= exact <= self.upper_fraction()

    def encloses(self, other: "Interval") -> bool:
        return mpf_cmp(self.lower, other.lower) <= 0 and mpf_cmp(other.upper, self.upper) <= 0

    def is_positive(self) -> bool:
        return mpf_cmp(self.lower, fzero) > 0

    def is_negative(self) -> bool:
        return mpf_cmp(self.upper, fzero) < 0

    def excludes_zero(self) -> bool:
        return self.is_positive() or self.is_negative()

    def is_point(self) -> bool:
        return mpf_cmp(self.lower, self.upper) == 0

    def rounded(self, bits: int) -> "Interval":
        """Re-round the endpoints outward to ``bits``."""
        return Interval(mpf_pos(self.lower, bits, round_floor), mpf_pos(self.upper, bits, round_ceiling), bits)

    # ---------- formatting ----------

    def decimal_digits(self) -> int:
        return prec_to_dps(self.bits) + 2

    def format_lo(self, digits: int | None = None) -> str:
        return _directed_decimal(self.lower_fraction(), digits or self.decimal_digits(), upward=False)

    def format_hi(self, digits: int | None = None) -> str:
        return _directed_decimal(self.upper_fraction(), digits or self.decimal_digits(), upward=True)

    def format_mid(self, digits: int | None = None) -> str:
        return to_str(mpf_shift(mpf_add(self.lower, self.upper), -1), digits or self.decimal_digits())

    def format_width(self, digits: int = 4) -> str:
        return _directed_decimal(_to_fraction(self.width()._mpf_), digits, upward=True)

    def __str__(self) -> str:
        return f"[{self.format_lo()}, {self.format_hi()}]"

    # ---------- arithmetic ----------

    def _other(self, other: Operand) -> "Interval":
        return Interval.coerce(other, self.bits)

    def __add__(self, other: Operand) -> "Interval":
        return iv_apply("add", self, self._other(other), bits=self.bits)

    def __radd__(self, other: Operand) -> "Interval":
        return iv_apply("add", self._other(other), self, bits=self.bits)

    def __sub__(self, other: Operand) -> "Interval":
        return iv_apply("sub", self, self._other(other), bits=self.bits)

    def __rsub__(self, other: Operand) -> "Interval":
        return iv_apply("sub", self._other(other), self, bits=self.bits)

    def __mul__(self, other: Operand) -> "Interval":
        return iv_apply("mul", self, self._other(other), bits=self.bits)

    def __rmul__(self, other: Operand) -> "Interval":
        return iv_apply("mul", self._other(other), self, bits=self.bits)

    def __truediv__(self, other: Operand) -> "Interval":
        return iv_apply("div", self, self._other(other), bits=self.bits)

    def __rtruediv__(self, other: Operand) -> "Interval":
        return iv_apply("div", self._other(other), self, bits=self.bits)

    def __neg__(self) -> "Interval":
        return Interval(mpf_neg(self.upper), mpf_neg(self.lower), self.bits)

    def __pow__(self, exponent: int) -> "Interval":
        return iv_apply("int_pow", self, exponent, bits=self.bits)

    def half(self) -> "Interval":
        return Interval(mpf_shift(self.lower, -1), mpf_shift(self.upper, -1), self.bits)

    def exp(self) -> "Interval":
        return iv_apply("exp", self, bits=self.bits)

    def log(self) -> "Interval":
        return iv_apply("log", self, bits=self.bits)

    def sqrt(self) -> "Interval":
        return iv_apply("sqrt", self, bits=self.bits)

    def nth_root(self, degree: int) -> "Interval":
        return iv_apply("nth_root", self, degree, bits=self.bits)

    def sinh(self) -> "Interval":
        return (self.exp() - (-self).exp()).half()


# ---------- operation kernels ----------


def _add(a: Interval, b: Interval, bits: int) -> Interval:
    return Interval(mpf_add(a.lower, b.lower, bits, round_floor), mpf_add(a.upper, b.upper, bits, round_ceiling), bits)


def _sub(a: Interval, b: Interval, bits: int) -> Interval:
    return Interval(mpf_sub(a.lower, b.upper, bits, round_floor), mpf_sub(a.upper, b.lower, bits, round_ceiling), bits)


def _extremes(op: Callable[..., RawFloat], a: Interval, b: Interval, bits: int) -> Interval:
    pairs = ((a.lower, b.lower), (a.lower, b.upper), (a.upper, b.lower), (a.upper, b.upper))
    lows = [op(x, y, bits, round_floor) for x, y in pairs]
    highs = [op(x, y, bits, round_ceiling) for x, y in pairs]
    low = lows[0]
    for candidate in lows[1:]:
        if mpf_cmp(candidate, low) < 0:
            low = candidate
    high = highs[0]
    for candidate in highs[1:]:
        if mpf_cmp(candidate, high) > 0:
            high = candidate
    return Interval(low, high, bits)


def _mul(a: Interval, b: Interval, bits: int) -> Interval:
    return _extremes(mpf_mul, a, b, bits)


def _div(a: Interval, b: Interval, bits: int) -> Interval:
    if not b.excludes_zero():
        raise DomainError("div", "denominator interval contains zero")
    return _extremes(mpf_div, a, b, bits)


def _int_pow(a: Interval, exponent: int, bits: int) -> Interval:
    if exponent < 0:
        return _div(Interval.from_int(1, bits), _int_pow(a, -exponent, bits), bits)
    if exponent == 0:
        return Interval(fone, fone, bits)
    if a.is_positive() or _is_zero(a.lower):
        return _nonnegative_pow(a, exponent, bits)
    if mpf_cmp(a.upper, fzero) <= 0:
        mirrored = _nonnegative_pow(-a, exponent, bits)
        return -mirrored if exponent % 2 else mirrored
    # straddles zero
    if exponent % 2:
        low = _nonnegative_pow(Interval(fzero, mpf_neg(a.lower), bits), exponent, bits)
        high = _nonnegative_pow(Interval(fzero, a.upper, bits), exponent, bits)
        return Interval(mpf_neg(low.upper), high.upper, bits)
    reach = mpf_neg(a.lower) if mpf_cmp(mpf_neg(a.lower), a.upper) > 0 else a.upper
    top = _nonnegative_pow(Interval(fzero, reach, bits), exponent, bits)
    return Interval(fzero, top.upper, bits)


def _nonnegative_pow(a: Interval, exponent: int, bits: int) -> Interval:
    # square-and-multiply keeps every step a correctly rounded product
    result = Interval(fone, fone, bits)
    base = a
    while exponent:
        if exponent & 1:
            result = _mul(result, base, bits)
        exponent >>= 1
        if exponent:
            base = _mul(base, base, bits)
    return result


def _sqrt(a: Interval, bits: int) -> Interval:
    if mpf_cmp(a.lower, fzero) < 0:
        raise DomainError("sqrt", "argument interval extends below zero")
    return Interval(mpf_sqrt(a.lower, bits, round_floor), mpf_sqrt(a.upper, bits, round_ceiling), bits)


def _root_endpoint(raw: RawFloat, degree: int, bits: int, *, upward: bool) -> RawFloat:
    if _is_zero(raw):
        return fzero
    wp = bits + GUARD_BITS
    candidate = mpf_nthroot(raw, degree, wp, round_ceiling if upward else round_floor)
    if mpf_cmp(mpf_pow_int(candidate, degree, wp * degree + 64, round_nearest), raw) == 0:
        exact = mpf_pos(candidate, bits, round_ceiling if upward else round_floor)
        if mpf_cmp(exact, candidate) == 0:
            return exact
    return pad_up(candidate, bits) if upward else pad_down(candidate, bits)


def _nth_root(a: Interval, degree: int, bits: int) -> Interval:
    if degree < 1:
        raise DomainError("nth_root", f"root degree must be positive, got {degree}")
    if mpf_cmp(a.lower, fzero) < 0:
        raise DomainError("nth_root", "argument interval extends below zero")
    if degree == 1:
        return a.rounded(bits)
    if degree == 2:
        return _sqrt(a, bits)
    return Interval(
        _root_endpoint(a.lower, degree, bits, upward=False),
        _root_endpoint(a.upper, degree, bits, upward=True),
        bits,
    )


def _exp(a: Interval, bits: int) -> Interval:
    wp = bits + GUARD_BITS
    low = fone if _is_zero(a.lower) else pad_down(mpf_exp(a.lower, wp, round_floor), bits)
    high = fone if _is_zero(a.upper) else pad_up(mpf_exp(a.upper, wp, round_ceiling), bits)
    return Interval(low, high, bits)


def _log(a: Interval, bits: int) -> Interval:
    if mpf_cmp(a.lower, fzero) <= 0:
        raise DomainError("log", "argument interval is not strictly positive")
    wp = bits + GUARD_BITS
    low = fzero if mpf_cmp(a.lower, fone) == 0 else pad_down(mpf_log(a.lower, wp, round_floor), bits)
    high = fzero if mpf_cmp(a.upper, fone) == 0 else pad_up(mpf_log(a.upper, wp, round_ceiling), bits)
    return Interval(low, high, bits)


_BINARY = {"add": _add, "sub": _sub, "mul": _mul, "div": _div}
_UNARY = {"sqrt": _sqrt, "exp": _exp, "log": _log}
_WITH_DEGREE = {"nth_root": _nth_root, "int_pow": _int_pow}

OPERATIONS = tuple(sorted((*_BINARY, *_UNARY, *_WITH_DEGREE)))


def iv_apply(op: str, *args: Operand, bits: int) -> Interval:
    """Apply ``op`` to interval or integer operands with outward rounding at ``bits``.

    Binary ops take two operands; ``sqrt``/``exp``/``log`` take one; ``nth_root``
    and ``int_pow`` take an interval and an integer degree.
    """

    if bits < 2:
        raise ValueError(f"precision must be at least 2 bits, got {bits}")
    if op in _BINARY:
        if len(args) != 2:
            raise TypeError(f"{op} expects 2 operands, got {len(args)}")
        left, right = (Interval.coerce(arg, bits) for arg in args)
        return _BINARY[op](left, right, bits)
    if op in _UNARY:
        if len(args) != 1:
            raise TypeError(f"{op} expects 1 operand, got {len(args)}")
        return _UNARY[op](Interval.coerce(args[0], bits), bits)
    if op in _WITH_DEGREE:
        if len(args) != 2 or not isinstance(args[1], int) or isinstance(args[1], bool):
            raise TypeError(f"{op} expects an operand and an integer degree")
        return _WITH_DEGREE[op](Interval.coerce(args[0], bits), args[1], bits)
    raise UnknownOperationError(f"unknown interval operation {op!r} (known: {', '.join(OPERATIONS)})")
