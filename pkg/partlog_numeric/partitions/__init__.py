"""Exact partition numbers, their logarithms, and the on-disk cache."""

from __future__ import annotations

from .cache import CACHE_HEADER, cache_sync, load_cache, write_range
from .errors import CacheFormatError, CacheMismatchError, PartitionCacheError
from .table import PartitionTable, install_shared_table, log_partition, partition, shared_table

__all__ = [
    "CACHE_HEADER",
    "CacheFormatError",
    "CacheMismatchError",
    "PartitionCacheError",
    "PartitionTable",
    "cache_sync",
    "install_shared_table",
    "load_cache",
    "log_partition",
    "partition",
    "shared_table",
    "write_range",
]
