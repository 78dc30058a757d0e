"""Persistent text cache of partition numbers.

Format: a ``#partlog-cache v1`` header, then ``n<TAB>p(n)`` lines with n
strictly increasing from 0, every line newline-terminated.
"""

from __future__ import annotations

import logging
import re
from pathlib import Path

from .errors import CacheFormatError
from .table import PartitionTable

logger = logging.getLogger(__name__)

__all__ = ["CACHE_HEADER", "cache_sync", "load_cache", "write_range"]

CACHE_MAGIC = "#partlog-cache"
CACHE_VERSION = "v1"
CACHE_HEADER = f"{CACHE_MAGIC} {CACHE_VERSION}"

_DIGITS = re.compile(r"[0-9]+")


def _read_cache(path: Path) -> tuple[bool, list[int]]:
    if not path.exists():
        return False, []
    text = path.read_text(encoding="utf-8")
    if not text:
        return False, []
    lines = text.split("\n")
    if lines[-1] != "":
        raise CacheFormatError(path, len(lines), lines[-1], "line is not newline-terminated")
    lines.pop()
    header = lines[0]
    if header != CACHE_HEADER:
        if header.startswith(CACHE_MAGIC):
            raise CacheFormatError(path, 1, header, f"unsupported cache version (expected {CACHE_VERSION})")
        raise CacheFormatError(path, 1, header, "missing cache header")
    values: list[int] = []
    for line_number, line in enumerate(lines[1:], start=2):
        index_text, tab, value_text = line.partition("\t")
        if not tab or not _DIGITS.fullmatch(index_text):
            raise CacheFormatError(path, line_number, line, "expected 'n<TAB>value'")
        index = int(index_text)
        if index != len(values):
            raise CacheFormatError(path, line_number, line, f"expected index {len(values)}", index=index)
        if not _DIGITS.fullmatch(value_text):
            raise CacheFormatError(path, line_number, line, "value is not a decimal integer", index=index)
        values.append(int(value_text))
    return True, values


def load_cache(path: Path | str) -> PartitionTable:
    """Load the cached prefix into a fresh table; a missing or empty file gives p(0) only."""

    _, values = _read_cache(Path(path))
    table = PartitionTable(values)
    logger.debug("loaded %d cached partition values from %s", len(values), path)
    return table


def cache_sync(path: Path | str, upto: int, table: PartitionTable) -> PartitionTable:
    """Make the cache file hold p(0..upto), appending only the missing suffix."""

    if upto < 0:
        raise ValueError(f"upto must be nonnegative, got {upto}")
    path = Path(path)
    has_header, stored = _read_cache(path)
    table.adopt(stored)
    if len(stored) > upto:
        return table
    table.extend(upto)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("a", encoding="utf-8", newline="\n") as handle:
        if not has_header:
            handle.write(CACHE_HEADER + "\n")
        for n in range(len(stored), upto + 1):
            handle.write(f"{n}\t{table[n]}\n")
    logger.debug("appended p(%d..%d) to %s", len(stored), upto, path)
    return table


def write_range(path: Path | str, start: int, stop: int, table: PartitionTable) -> int:
    """Write ``n<TAB>p(n)`` lines for start <= n <= stop; returns the number of lines."""

    if start < 0 or stop < start:
        raise ValueError(f"invalid range {start}..{stop}")
    values = table.values(start, stop)
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        for offset, value in enumerate(values):
            handle.write(f"{start + offset}\t{value}\n")
    return len(values)
