"""Errors raised while loading or syncing the partition cache."""

from __future__ import annotations

from pathlib import Path


class PartitionCacheError(Exception):
    """Base class for partition cache failures."""


class CacheFormatError(PartitionCacheError):
    """Raised when a cache file line cannot be accepted."""

    def __init__(self, path: Path, line_number: int, line: str, reason: str, *, index: int | None = None) -> None:
        location = f"{path}:{line_number}"
        if index is not None:
            location += f" (n={index})"
        super().__init__(f"{location}: {reason}: {line!r}")
        self.path = path
        self.line_number = line_number
        self.line = line
        self.reason = reason
        self.index = index


class CacheMismatchError(PartitionCacheError):
    """Raised when cached values disagree with values already held in memory."""

    def __init__(self, index: int) -> None:
        super().__init__(f"cached p({index}) disagrees with the in-memory table")
        self.index = index
