"""Chunked fan-out of per-index work over a process pool."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

from partlog_numeric.partitions import PartitionTable, install_shared_table, shared_table

logger = logging.getLogger(__name__)

__all__ = ["ChunkCallback", "chunked", "run_chunked"]

ItemT = TypeVar("ItemT")
ResultT = TypeVar("ResultT")

Worker = Callable[[Sequence[ItemT], PartitionTable], list[ResultT]]
ChunkCallback = Callable[[int, int], None]
"""Called as ``on_chunk(done_items, total_items)`` after each chunk merges."""


def chunked(items: Sequence[ItemT], size: int) -> list[Sequence[ItemT]]:
    if size < 1:
        raise ValueError(f"chunk size must be >= 1, got {size}")
    return [items[start : start + size] for start in range(0, len(items), size)]


def _call_in_worker(worker: Worker, chunk: Sequence[ItemT]) -> list[ResultT]:
    return worker(chunk, shared_table())


def run_chunked(
    worker: Worker,
    items: Sequence[ItemT],
    *,
    table: PartitionTable,
    jobs: int = 1,
    chunk_size: int | None = None,
    on_chunk: ChunkCallback | None = None,
) -> list[ResultT]:
    """Apply ``worker`` to contiguous chunks of ``items`` and concatenate in item order.

    ``table`` must already reach every index the worker reads; worker
    processes receive a copy through the pool initializer and never extend it
    concurrently with the parent.
    """

    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    total = len(items)
    if total == 0:
        return []
    size = chunk_size or max(1, -(-total // (jobs * 4)))
    chunks = chunked(items, size)
    results: list[ResultT] = []
    done = 0

    if jobs == 1 or len(chunks) == 1:
        for chunk in chunks:
            results.extend(worker(chunk, table))
            done += len(chunk)
            if on_chunk is not None:
                on_chunk(done, total)
        return results

    logger.debug("dispatching %d chunks of up to %d items to %d workers", len(chunks), size, jobs)
    with ProcessPoolExecutor(max_workers=jobs, initializer=install_shared_table, initargs=(table,)) as pool:
        futures = [pool.submit(_call_in_worker, worker, chunk) for chunk in chunks]
        for chunk, future in zip(chunks, futures):
            results.extend(future.result())
            done += len(chunk)
            if on_chunk is not None:
                on_chunk(done, total)
    return results
