"""Memoized enclosures of the named real constants."""

from __future__ import annotations

import logging
import threading
from typing import Callable

from mpmath.libmp import mpf_pi, round_ceiling, round_floor

from .errors import UnknownConstantError
from .interval import GUARD_BITS, Interval, pad_down, pad_up

logger = logging.getLogger(__name__)

__all__ = ["CONSTANT_NAMES", "iv_const"]

_CACHE: dict[tuple[str, int], Interval] = {}
_LOCK = threading.Lock()


def _pi(bits: int) -> Interval:
    wp = bits + GUARD_BITS
    return Interval(pad_down(mpf_pi(wp, round_floor), bits), pad_up(mpf_pi(wp, round_ceiling), bits), bits)


def _sqrt24(bits: int) -> Interval:
    return Interval.from_int(24, bits).sqrt()


def _d(bits: int) -> Interval:
    # pi^2 / (6 sqrt 3)
    pi = _pi(bits)
    return pi * pi / (Interval.from_int(3, bits).sqrt() * 6)


def _alpha(bits: int) -> Interval:
    # 3 pi / sqrt 24
    return _pi(bits) * 3 / _sqrt24(bits)


def _pi24(bits: int) -> Interval:
    return _pi(bits) / _sqrt24(bits)


_BUILDERS: dict[str, Callable[[int], Interval]] = {
    "pi": _pi,
    "d": _d,
    "alpha": _alpha,
    "sqrt24": _sqrt24,
    "pi24": _pi24,
}

CONSTANT_NAMES = tuple(_BUILDERS)


def iv_const(name: str, bits: int) -> Interval:
    """Return an enclosure of constant ``name`` rounded outward to ``bits``."""

    if bits < 2:
        raise ValueError(f"precision must be at least 2 bits, got {bits}")
    builder = _BUILDERS.get(name)
    if builder is None:
        raise UnknownConstantError(name, CONSTANT_NAMES)
    key = (name, bits)
    cached = _CACHE.get(key)
    if cached is not None:
        return cached
    with _LOCK:
        cached = _CACHE.get(key)
        if cached is None:
            cached = builder(bits + GUARD_BITS).rounded(bits)
            _CACHE[key] = cached
            logger.debug("computed constant %s at %d bits", name, bits)
    return cached
