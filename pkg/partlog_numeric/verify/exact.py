"""Integer discriminants whose sign decides a statement with no rounding at all."""

from __future__ import annotations

from enum import Enum

from partlog_numeric.partitions import PartitionTable, partition, shared_table

__all__ = ["DiscriminantKind", "exact_discriminant"]


class DiscriminantKind(str, Enum):
    LOGCONC = "logconc"
    CHEN = "chen"
    DELTA3 = "delta3"
    DECREASING = "decreasing"


def exact_discriminant(kind: DiscriminantKind | str, n: int, table: PartitionTable | None = None) -> int:
    """Positive exactly when the statement ``kind`` holds at ``n``.

    logconc:     p(n)^2 - p(n-1) p(n+1)
    chen:        (n+1) p(n-1) p(n+1) - n p(n)^2
    delta3:      p(n+2) p(n)^3 - p(n+1)^3 p(n-1)
    decreasing:  p(n)^(n+1) - p(n+1)^n
    """

    kind = DiscriminantKind(kind)
    if n < 1:
        raise ValueError(f"discriminants need n >= 1, got {n}")
    table = table if table is not None else shared_table()

    def p(k: int) -> int:
        return partition(k, table)

    if kind is DiscriminantKind.LOGCONC:
        return p(n) ** 2 - p(n - 1) * p(n + 1)
    if kind is DiscriminantKind.CHEN:
        return (n + 1) * p(n - 1) * p(n + 1) - n * p(n) ** 2
    if kind is DiscriminantKind.DELTA3:
        return p(n + 2) * p(n) ** 3 - p(n + 1) ** 3 * p(n - 1)
    return p(n) ** (n + 1) - p(n + 1) ** n
