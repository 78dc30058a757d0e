"""Shared machinery for the verifiers: sampling, certified decisions, timed fan-out."""

from __future__ import annotations

import logging
import time
from typing import Callable, Sequence

from partlog_numeric.parallel import ChunkCallback, run_chunked
from partlog_numeric.partitions import PartitionTable
from partlog_numeric.rigor import Interval, PrecisionPolicy, Sign, certify_sign

from .errors import RangeError
from .types import Verdict, VerificationReport

logger = logging.getLogger(__name__)

Expression = Callable[[int], Interval]
ChunkWorker = Callable[[Sequence[int], PartitionTable], list[Verdict]]


def sample_points(from_n: int, to_n: int, stride: int, minimum: int, maximum: int | None = None) -> list[int]:
    """``from_n, from_n + stride, ...`` with ``to_n`` always included."""

    if stride < 1:
        raise RangeError(f"sample stride must be >= 1, got {stride}")
    if from_n > to_n:
        raise RangeError(f"empty range: from {from_n} exceeds to {to_n}")
    if from_n < minimum:
        raise RangeError(f"range starts at {from_n} but the statement needs n >= {minimum}")
    if maximum is not None and to_n > maximum:
        raise RangeError(f"range ends at {to_n} but the statement is only defined up to {maximum}")
    points = list(range(from_n, to_n + 1, stride))
    if points[-1] != to_n:
        points.append(to_n)
    return points


def decide(n: int, expressions: Sequence[Expression], policy: PrecisionPolicy) -> Verdict:
    """Certify that every expression is positive at ``n``.

    A certified negative part decides the verdict at once; otherwise any
    undecided part leaves the index indeterminate.
    """

    bits_used = 0
    undecided = False
    for expression in expressions:
        certificate = certify_sign(expression, policy)
        bits_used = max(bits_used, certificate.bits)
        if certificate.sign is Sign.NEGATIVE:
            return Verdict(n, Sign.NEGATIVE, bits_used)
        if certificate.sign is Sign.INDETERMINATE:
            undecided = True
    return Verdict(n, Sign.INDETERMINATE if undecided else Sign.POSITIVE, bits_used)


def run_report(
    label: str,
    points: Sequence[int],
    worker: ChunkWorker,
    *,
    table: PartitionTable,
    jobs: int,
    on_chunk: ChunkCallback | None,
) -> VerificationReport:
    logger.info("verifying %s on [%d, %d] (%d points, %d jobs)", label, points[0], points[-1], len(points), jobs)
    started = time.perf_counter()
    verdicts = run_chunked(worker, points, table=table, jobs=jobs, on_chunk=on_chunk)
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    report = VerificationReport.from_verdicts(label, points[0], points[-1], verdicts, elapsed_ms)
    if report.indeterminates:
        logger.warning(
            "%s: %d indices undecided at %d bits", label, len(report.indeterminates), report.max_bits_used
        )
    logger.info("%s finished: %s in %d ms", label, report.status.value, elapsed_ms)
    return report
