"""Exact partition numbers from Euler's pentagonal-number recurrence."""

from __future__ import annotations

import logging
import threading
from typing import Any, Iterable, Sequence

from partlog_numeric.rigor import Interval
from partlog_numeric.rigor.interval import GUARD_BITS

from .errors import CacheMismatchError

logger = logging.getLogger(__name__)

__all__ = [
    "PartitionTable",
    "install_shared_table",
    "log_partition",
    "partition",
    "shared_table",
]


def _pentagonal_offsets(upto: int) -> tuple[list[int], list[bool]]:
    """Generalized pentagonal numbers <= ``upto`` in ascending order with their recurrence signs."""

    offsets: list[int] = []
    positive: list[bool] = []
    j = 1
    while True:
        first = j * (3 * j - 1) // 2
        if first > upto:
            break
        sign = j % 2 == 1
        offsets.append(first)
        positive.append(sign)
        second = first + j
        if second <= upto:
            offsets.append(second)
            positive.append(sign)
        j += 1
    return offsets, positive


class PartitionTable:
    """Append-only table of p(0), p(1), ..., p(max_n).

    Reads of the computed prefix need no locking; extension is serialized.
    """

    def __init__(self, values: Iterable[int] | None = None) -> None:
        self._values: list[int] = [1]
        self._lock = threading.Lock()
        if values is not None:
            self.adopt(list(values))

    @property
    def max_n(self) -> int:
        return len(self._values) - 1

    def __len__(self) -> int:
        return len(self._values)

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise IndexError(f"partition index must be nonnegative, got {n}")
        if n > self.max_n:
            self.extend(n)
        return self._values[n]

    def extend(self, upto: int) -> None:
        """Compute p(k) for every k <= ``upto`` that is not yet known."""

        if upto <= self.max_n:
            return
        with self._lock:
            start = len(self._values)
            if upto < start:
                return
            values = self._values
            offsets, positive = _pentagonal_offsets(upto)
            pairs = list(zip(offsets, positive))
            for k in range(start, upto + 1):
                total = 0
                for offset, add in pairs:
                    if offset > k:
                        break
                    if add:
                        total += values[k - offset]
                    else:
                        total -= values[k - offset]
                values.append(total)
            logger.debug("extended partition table from %d to %d", start - 1, upto)

    def adopt(self, prefix: Sequence[int]) -> None:
        """Take over an externally stored prefix p(0..len(prefix)-1)."""

        if not prefix:
            return
        if prefix[0] != 1:
            raise CacheMismatchError(0)
        with self._lock:
            overlap = min(len(prefix), len(self._values))
            for index in range(overlap):
                if prefix[index] != self._values[index]:
                    raise CacheMismatchError(index)
            self._values.extend(prefix[overlap:])

    def values(self, start: int, stop: int) -> tuple[int, ...]:
        """p(start..stop) inclusive."""
        self.extend(stop)
        return tuple(self._values[start : stop + 1])

    def snapshot(self) -> tuple[int, ...]:
        return tuple(self._values)

    def __getstate__(self) -> dict[str, Any]:
        return {"values": list(self._values)}

    def __setstate__(self, state: dict[str, Any]) -> None:
        self._values = list(state["values"])
        self._lock = threading.Lock()


_SHARED = PartitionTable()


def shared_table() -> PartitionTable:
    return _SHARED


def install_shared_table(table: PartitionTable) -> None:
    """Replace the process-wide table (used by worker initializers)."""
    global _SHARED
    _SHARED = table


def partition(n: int, table: PartitionTable | None = None) -> int:
    """Return p(n), extending ``table`` through ``n`` when needed."""

    if n < 0:
        raise ValueError(f"partition index must be nonnegative, got {n}")
    return (table if table is not None else _SHARED)[n]


def log_partition(n: int, bits: int, table: PartitionTable | None = None) -> Interval:
    """Enclosure of log p(n); the exact integer is first rounded outward to its leading bits."""

    if n < 1:
        raise ValueError(f"log_partition needs n >= 1, got {n}")
    wp = bits + GUARD_BITS
    return Interval.from_int(partition(n, table), wp).log().rounded(bits)
