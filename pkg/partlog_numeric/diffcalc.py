"""Finite differences of log-quantities of p(n) and the two limit tables.

Indexing is fixed by the centre ``n``:

    order 2:  f(n+1) + f(n-1) - 2 f(n)              (the second difference at n-1)
    order 3:  f(n+2) - 3 f(n+1) + 3 f(n) - f(n-1)   (the third difference at n-1)

so ``delta(kind, 2, n)`` is the quantity conventionally written with the
shifted argument ``n-1``.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import partial
from typing import Any, Sequence

from partlog_numeric.hrr import log_t_tilde_at
from partlog_numeric.parallel import ChunkCallback, run_chunked
from partlog_numeric.partitions import PartitionTable, partition, shared_table
from partlog_numeric.rigor import DEFAULT_POLICY, Interval, PrecisionExhaustedError, iv_const
from partlog_numeric.rigor.interval import GUARD_BITS

logger = logging.getLogger(__name__)

__all__ = [
    "DifferenceEnclosure",
    "LIMIT_TABLES",
    "LimitTableRow",
    "LogQuantityKind",
    "delta",
    "limit_table",
    "parse_grid",
    "quantity",
    "raw_delta",
    "width_target_met",
]


class LogQuantityKind(str, Enum):
    LOG_P = "log_p"
    LOG_R = "log_r"
    NTHROOT_LOG_P = "nthroot_log_p"
    NTHROOT_LOG_T = "nthroot_log_T"
    B_TILDE = "b_tilde"
    E_TILDE = "e_tilde"
    NTHROOT_LOG_N = "nthroot_log_n"


def _log_p(n: int, wp: int, table: PartitionTable) -> Interval:
    return Interval.from_int(partition(n, table), wp).log()


def _log_n(n: int, wp: int) -> Interval:
    return Interval.from_int(n, wp).log()


def _quantity_at(kind: LogQuantityKind, n: int, wp: int, table: PartitionTable) -> Interval:
    if kind is LogQuantityKind.LOG_P:
        return _log_p(n, wp, table)
    if kind is LogQuantityKind.LOG_R:
        return (_log_p(n, wp, table) - _log_n(n, wp)) / n
    if kind is LogQuantityKind.NTHROOT_LOG_P:
        return _log_p(n, wp, table) / n
    if kind is LogQuantityKind.NTHROOT_LOG_T:
        return log_t_tilde_at(n, wp) / n
    if kind is LogQuantityKind.B_TILDE:
        return (log_t_tilde_at(n, wp) - _log_n(n, wp)) / n
    if kind is LogQuantityKind.E_TILDE:
        # log(1 + y~) = log p - log T~
        return (_log_p(n, wp, table) - log_t_tilde_at(n, wp)) / n
    return _log_n(n, wp) / n


def quantity(kind: LogQuantityKind | str, n: int, bits: int, table: PartitionTable | None = None) -> Interval:
    """Enclosure of the log-quantity ``kind`` at index ``n``."""

    kind = LogQuantityKind(kind)
    if n < 1:
        raise ValueError(f"{kind.value} needs n >= 1, got {n}")
    return _quantity_at(kind, n, bits + GUARD_BITS, table if table is not None else shared_table()).rounded(bits)


_STENCILS: dict[int, tuple[tuple[int, int], ...]] = {
    2: ((1, 1), (-1, 1), (0, -2)),
    3: ((2, 1), (1, -3), (0, 3), (-1, -1)),
}


def raw_delta(
    kind: LogQuantityKind | str,
    order: int,
    n: int,
    bits: int,
    table: PartitionTable | None = None,
) -> Interval:
    """Single-precision enclosure of the order-2 or order-3 difference centred at ``n``."""

    kind = LogQuantityKind(kind)
    stencil = _STENCILS.get(order)
    if stencil is None:
        raise ValueError(f"difference order must be 2 or 3, got {order}")
    if n < 2:
        raise ValueError(f"differences need centre n >= 2, got {n}")
    table = table if table is not None else shared_table()
    wp = bits + GUARD_BITS
    total = Interval.from_int(0, wp)
    for offset, weight in stencil:
        total = total + weight * _quantity_at(kind, n + offset, wp, table)
    return total.rounded(bits)


def width_target_met(enclosure: Interval, n: int) -> bool:
    """True when width < n^(-5/2) / 8, checked exactly as 64 w^2 n^5 < 1."""

    width = enclosure.upper_fraction() - enclosure.lower_fraction()
    return 64 * width * width * n**5 < 1


@dataclass(frozen=True)
class DifferenceEnclosure:
    kind: LogQuantityKind
    order: int
    center: int
    interval: Interval
    bits: int
    converged: bool


def delta(
    kind: LogQuantityKind | str,
    order: int,
    n: int,
    bits: int,
    table: PartitionTable | None = None,
    max_bits: int | None = None,
) -> DifferenceEnclosure:
    """Difference enclosure with precision doubled until the width target is met.

    When ``max_bits`` is reached first the result carries ``converged=False``
    and the widest-precision enclosure obtained.
    """

    kind = LogQuantityKind(kind)
    ceiling = max(bits, max_bits if max_bits is not None else DEFAULT_POLICY.max_bits)
    current = bits
    while True:
        enclosure = raw_delta(kind, order, n, current, table)
        if width_target_met(enclosure, n):
            return DifferenceEnclosure(kind, order, n, enclosure, current, True)
        if current >= ceiling:
            logger.warning(
                "difference %s order %d at n=%d missed the width target at %d bits", kind.value, order, n, current
            )
            return DifferenceEnclosure(kind, order, n, enclosure, current, False)
        current = min(current * 2, ceiling)


# ---------- limit tables ----------


@dataclass(frozen=True)
class LimitTableRow:
    n: int
    value: Interval
    target: Interval
    abs_dev: Any

    @property
    def value_lo(self) -> Any:
        return self.value.lo

    @property
    def value_hi(self) -> Any:
        return self.value.hi


def _three_halves(n: int, bits: int) -> Interval:
    base = Interval.from_int(n, bits)
    return base * base.sqrt()


def _converged(kind: LogQuantityKind, n: int, bits: int, max_bits: int, table: PartitionTable) -> Interval:
    result = delta(kind, 2, n, bits, table, max_bits)
    if not result.converged:
        raise PrecisionExhaustedError(max_bits, f"{kind.value} second difference at n={n}")
    return result.interval


def _pi24_value(n: int, bits: int, max_bits: int, table: PartitionTable) -> Interval:
    # -n^(3/2) times the second difference of log p centred at n
    enclosure = _converged(LogQuantityKind.LOG_P, n, bits, max_bits, table)
    return -(_three_halves(n, enclosure.bits) * enclosure)


def _alpha_value(n: int, bits: int, max_bits: int, table: PartitionTable) -> Interval:
    # n^(5/2) times the second difference of (1/k) log p(k) taken at n, i.e. centred at n+1
    enclosure = _converged(LogQuantityKind.NTHROOT_LOG_P, n + 1, bits, max_bits, table)
    return Interval.from_int(n, enclosure.bits) * _three_halves(n, enclosure.bits) * enclosure


_VALUE_BUILDERS = {"pi24": _pi24_value, "alpha": _alpha_value}
_TABLE_REACH = {"pi24": 1, "alpha": 2}
LIMIT_TABLES = tuple(_VALUE_BUILDERS)


def _limit_rows(
    which: str, bits: int, max_bits: int, grid: Sequence[int], table: PartitionTable
) -> list[LimitTableRow]:
    builder = _VALUE_BUILDERS[which]
    target = iv_const(which, bits)
    rows = []
    for n in grid:
        value = builder(n, bits, max_bits, table).rounded(bits)
        rows.append(LimitTableRow(n=n, value=value, target=target, abs_dev=(value - target).abs_upper()))
    return rows


def limit_table(
    which: str,
    grid: Sequence[int],
    bits: int,
    table: PartitionTable | None = None,
    *,
    jobs: int = 1,
    max_bits: int | None = None,
    on_chunk: ChunkCallback | None = None,
) -> list[LimitTableRow]:
    """Scaled second differences approaching pi/sqrt(24) (``pi24``) or 3 pi/sqrt(24) (``alpha``)."""

    if which not in _VALUE_BUILDERS:
        raise ValueError(f"unknown limit table {which!r}; expected one of {', '.join(LIMIT_TABLES)}")
    points = list(grid)
    if not points:
        return []
    if any(n < 2 for n in points):
        raise ValueError("grid entries must be >= 2")
    if any(a >= b for a, b in zip(points, points[1:])):
        raise ValueError("grid must be strictly ascending")
    table = table if table is not None else shared_table()
    table.extend(points[-1] + _TABLE_REACH[which])
    logger.debug("limit table %s over %d points at %d bits", which, len(points), bits)
    ceiling = max(bits, max_bits if max_bits is not None else DEFAULT_POLICY.max_bits)
    worker = partial(_limit_worker, which, bits, ceiling)
    return run_chunked(worker, points, table=table, jobs=jobs, chunk_size=1, on_chunk=on_chunk)


def _limit_worker(
    which: str, bits: int, max_bits: int, chunk: Sequence[int], table: PartitionTable
) -> list[LimitTableRow]:
    return _limit_rows(which, bits, max_bits, chunk, table)


_GEOMETRIC = re.compile(r"^geometric:(\d+):(\d+):([0-9]+(?:\.[0-9]+)?)$")


def parse_grid(spec: str) -> list[int]:
    """Expand ``"geometric:a:b:f"`` (a, a f, a f^2, ... <= b) or ``"a,b,c"`` into sorted distinct ints."""

    text = spec.strip()
    match = _GEOMETRIC.match(text)
    if match:
        start, stop, factor = int(match.group(1)), int(match.group(2)), Fraction(match.group(3))
        if factor <= 1:
            raise ValueError(f"geometric factor must exceed 1, got {match.group(3)}")
        if start < 1 or start > stop:
            raise ValueError(f"geometric grid needs 1 <= a <= b, got a={start}, b={stop}")
        points: set[int] = set()
        current = Fraction(start)
        while current <= stop:
            points.add(round(current))
            current *= factor
        return sorted(p for p in points if p <= stop)
    if text.startswith("geometric"):
        raise ValueError(f"malformed geometric grid {spec!r}; expected geometric:a:b:f")
    try:
        values = {int(part) for part in text.split(",") if part.strip()}
    except ValueError as exc:
        raise ValueError(f"malformed grid {spec!r}; expected comma-separated integers") from exc
    if not values:
        raise ValueError("grid is empty")
    return sorted(values)
