"""Per-statement checks and the range verifier.

Every interval check is a tuple of expressions ``(n, bits, table) -> Interval``
that must all be certified positive; a statement holds at ``n`` exactly when
they are. Exact checks use the integer discriminant of ``exact.py`` and there
a zero discriminant counts as a failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Callable, Sequence

from partlog_numeric import bounds
from partlog_numeric.diffcalc import LogQuantityKind, quantity, raw_delta
from partlog_numeric.parallel import ChunkCallback
from partlog_numeric.partitions import PartitionTable, shared_table
from partlog_numeric.rigor import DEFAULT_POLICY, Interval, PrecisionPolicy, exact_sign, iv_const

from .engine import decide, run_report, sample_points
from .errors import RangeError, UnknownTheoremError, UnsupportedMethodError
from .exact import DiscriminantKind, exact_discriminant
from .types import TheoremId, Verdict, VerificationMethod, VerificationReport

__all__ = ["THEOREM_IDS", "TheoremCheck", "theorem_check", "verify_theorem"]

Part = Callable[[int, int, PartitionTable], Interval]

LOG_P = LogQuantityKind.LOG_P
NTHROOT_LOG_P = LogQuantityKind.NTHROOT_LOG_P


@dataclass(frozen=True)
class TheoremCheck:
    theorem: TheoremId
    statement: str
    min_n: int
    parts: tuple[Part, ...]
    reach: int | None = 1
    strided: bool = False
    exact: DiscriminantKind | None = None

    @property
    def methods(self) -> tuple[VerificationMethod, ...]:
        if self.exact is None:
            return (VerificationMethod.INTERVAL,)
        return (VerificationMethod.EXACT, VerificationMethod.INTERVAL)

    @property
    def default_method(self) -> VerificationMethod:
        return self.methods[0]


# ---------- interval expressions ----------


def _power(n: int, bits: int, halves: int) -> Interval:
    # n^(halves/2)
    base = Interval.from_int(n, bits)
    return base ** (halves // 2) * base.sqrt() if halves % 2 else base ** (halves // 2)


def _log_concave(n: int, bits: int, table: PartitionTable) -> Interval:
    return -raw_delta(LOG_P, 2, n, bits, table)


def _chen(n: int, bits: int, table: PartitionTable) -> Interval:
    return raw_delta(LOG_P, 2, n, bits, table) + Interval.from_rational(n + 1, n, bits).log()


def _dp_conjecture(n: int, bits: int, table: PartitionTable) -> Interval:
    slack = (1 + iv_const("pi24", bits) / _power(n, bits, 3)).log()
    return raw_delta(LOG_P, 2, n, bits, table) + slack


def _r_log_convex(n: int, bits: int, table: PartitionTable) -> Interval:
    return raw_delta(LogQuantityKind.LOG_R, 2, n, bits, table)


def _nthroot_log_convex(n: int, bits: int, table: PartitionTable) -> Interval:
    return raw_delta(NTHROOT_LOG_P, 2, n, bits, table)


def _ratio_inequality(n: int, bits: int, table: PartitionTable) -> Interval:
    # 3 pi / sqrt(24) is the alpha constant
    slack = (1 + iv_const("alpha", bits) / _power(n, bits, 5)).log()
    return slack - raw_delta(NTHROOT_LOG_P, 2, n, bits, table)


def _delta3(n: int, bits: int, table: PartitionTable) -> Interval:
    return raw_delta(LOG_P, 3, n, bits, table)


def _decreasing(n: int, bits: int, table: PartitionTable) -> Interval:
    return quantity(NTHROOT_LOG_P, n, bits, table) - quantity(NTHROOT_LOG_P, n + 1, bits, table)


def _above_b1(n: int, bits: int, table: PartitionTable) -> Interval:
    b1, _ = bounds.sandwich_bounds(n, bits)
    return raw_delta(LogQuantityKind.NTHROOT_LOG_T, 2, n, bits, table) - b1


def _below_b2(n: int, bits: int, table: PartitionTable) -> Interval:
    _, b2 = bounds.sandwich_bounds(n, bits)
    return b2 - raw_delta(LogQuantityKind.NTHROOT_LOG_T, 2, n, bits, table)


def _error_below(n: int, bits: int, table: PartitionTable) -> Interval:
    return bounds.error_envelope(n, bits) - raw_delta(LogQuantityKind.E_TILDE, 2, n, bits, table)


def _error_above(n: int, bits: int, table: PartitionTable) -> Interval:
    return bounds.error_envelope(n, bits) + raw_delta(LogQuantityKind.E_TILDE, 2, n, bits, table)


def _c_positive(n: int, bits: int, table: PartitionTable) -> Interval:
    return bounds.c_lower(n, bits)


def _d_positive(n: int, bits: int, table: PartitionTable) -> Interval:
    return bounds.d_lower(n, bits)


def _under(upper: Callable[[int, int], Interval]) -> Part:
    # upper(n) - (-second difference of log p centred at n)
    def part(n: int, bits: int, table: PartitionTable) -> Interval:
        return upper(n, bits) + raw_delta(LOG_P, 2, n, bits, table)

    return part


def _nthroot_ratio_upper(n: int, bits: int, table: PartitionTable) -> Interval:
    return bounds.thm32_upper(n, bits) - raw_delta(NTHROOT_LOG_P, 2, n, bits, table)


def _c_surrogate(n: int, bits: int, table: PartitionTable) -> Interval:
    return bounds.c_surrogate(n, bits)


def _nthroot_ratio_majorant(n: int, bits: int, table: PartitionTable) -> Interval:
    return bounds.thm32_upper(n, bits) - bounds.thm32_majorant(n, bits)


_CHECKS: dict[TheoremId, TheoremCheck] = {
    check.theorem: check
    for check in (
        TheoremCheck(
            TheoremId.LOG_CONCAVITY,
            "p(n)^2 > p(n-1) p(n+1)",
            2,
            (_log_concave,),
            exact=DiscriminantKind.LOGCONC,
        ),
        TheoremCheck(
            TheoremId.CHEN,
            "p(n-1)/p(n) (1 + 1/n) > p(n)/p(n+1)",
            2,
            (_chen,),
            exact=DiscriminantKind.CHEN,
        ),
        TheoremCheck(
            TheoremId.DP_CONJECTURE,
            "p(n-1)/p(n) (1 + pi/(sqrt(24) n^(3/2))) > p(n)/p(n+1)",
            2,
            (_dp_conjecture,),
        ),
        TheoremCheck(TheoremId.R_LOG_CONVEX, "second difference of log r(n-1) > 0", 2, (_r_log_convex,)),
        TheoremCheck(
            TheoremId.NTHROOT_LOG_CONVEX,
            "second difference of (1/k) log p(k) at n-1 > 0",
            2,
            (_nthroot_log_convex,),
        ),
        TheoremCheck(
            TheoremId.RATIO_INEQUALITY,
            "second difference of (1/k) log p(k) at n-1 < log(1 + 3 pi/(sqrt(24) n^(5/2)))",
            2,
            (_ratio_inequality,),
        ),
        TheoremCheck(
            TheoremId.DELTA3_POSITIVE,
            "third difference of log p(n-1) > 0",
            2,
            (_delta3,),
            reach=2,
            exact=DiscriminantKind.DELTA3,
        ),
        TheoremCheck(
            TheoremId.NTHROOT_DECREASING,
            "p(n)^(1/n) > p(n+1)^(1/(n+1))",
            1,
            (_decreasing,),
            exact=DiscriminantKind.DECREASING,
        ),
        TheoremCheck(
            TheoremId.LOG_T_SANDWICH,
            "B1(n) < second difference of (1/k) log T~(k) at n-1 < B2(n)",
            2,
            (_above_b1, _below_b2),
            reach=None,
        ),
        TheoremCheck(
            TheoremId.ERROR_ENVELOPE,
            "|second difference of E~ at n-1| < (5/(n-1)) e^(-pi sqrt(24n-25)/18)",
            2,
            (_error_below, _error_above),
        ),
        TheoremCheck(TheoremId.C_POSITIVE, "C(n) > 0", 2, (_c_positive,), reach=None),
        TheoremCheck(TheoremId.D_POSITIVE, "D(n) > 0", 2, (_d_positive,), reach=None, strided=True),
        TheoremCheck(
            TheoremId.DP_UPPER,
            "-second difference of log p(n-1) < the 24(n-1)-1 upper bound",
            2,
            (_under(bounds.dp_upper),),
            strided=True,
        ),
        TheoremCheck(
            TheoremId.CWX_UPPER,
            "-second difference of log p(n-1) < q - q^2, q = 24 pi/(24n)^(3/2)",
            2,
            (_under(bounds.cwx_upper),),
            strided=True,
        ),
        TheoremCheck(
            TheoremId.NTHROOT_RATIO_UPPER,
            "second difference of (1/k) log p(k) at n-1 < 3 pi/(sqrt(24) n^(5/2) + 3 pi)",
            2,
            (_nthroot_ratio_upper,),
            strided=True,
        ),
        TheoremCheck(
            TheoremId.C_SURROGATE,
            "2(1 + log d)/(n-1)^3 > (3 + 1/48) sqrt(24) pi/(n-1)^(7/2)",
            2,
            (_c_surrogate,),
            reach=None,
            strided=True,
        ),
        TheoremCheck(
            TheoremId.NTHROOT_RATIO_MAJORANT,
            "B2(n) + envelope(n) < 3 pi/(sqrt(24) n^(5/2) + 3 pi)",
            2,
            (_nthroot_ratio_majorant,),
            reach=None,
            strided=True,
        ),
        TheoremCheck(
            TheoremId.DP_RELAXED,
            "-second difference of log p(n-1) < q - q^2 - 1/n^2 + 3/n^(5/2) + 2 e^(-(pi/10) sqrt(2n/3))",
            2,
            (_under(bounds.dp_relaxed_upper),),
            strided=True,
        ),
    )
}

THEOREM_IDS = tuple(theorem.value for theorem in TheoremId)


def theorem_check(theorem: TheoremId | str) -> TheoremCheck:
    try:
        return _CHECKS[TheoremId(theorem)]
    except ValueError:
        raise UnknownTheoremError(str(theorem), THEOREM_IDS) from None


def _decide_exact(check: TheoremCheck, n: int, table: PartitionTable) -> Verdict:
    assert check.exact is not None
    return Verdict(n, exact_sign(exact_discriminant(check.exact, n, table)), 0)


def _at_bits(part: Part, n: int, table: PartitionTable, bits: int) -> Interval:
    return part(n, bits, table)


def _decide_interval(check: TheoremCheck, n: int, policy: PrecisionPolicy, table: PartitionTable) -> Verdict:
    return decide(n, [partial(_at_bits, part, n, table) for part in check.parts], policy)


def _verify_chunk(
    theorem: str,
    method: str,
    policy: PrecisionPolicy,
    chunk: Sequence[int],
    table: PartitionTable,
) -> list[Verdict]:
    check = theorem_check(theorem)
    if VerificationMethod(method) is VerificationMethod.EXACT:
        return [_decide_exact(check, n, table) for n in chunk]
    return [_decide_interval(check, n, policy, table) for n in chunk]


def verify_theorem(
    theorem: TheoremId | str,
    from_n: int,
    to_n: int,
    policy: PrecisionPolicy = DEFAULT_POLICY,
    table: PartitionTable | None = None,
    sample_stride: int = 1,
    *,
    method: VerificationMethod | str | None = None,
    jobs: int = 1,
    points: Sequence[int] | None = None,
    on_chunk: ChunkCallback | None = None,
) -> VerificationReport:
    """Decide ``theorem`` at every index of ``[from_n, to_n]`` (or at ``points``) and report."""

    check = theorem_check(theorem)
    chosen = VerificationMethod(method) if method is not None else check.default_method
    if chosen not in check.methods:
        raise UnsupportedMethodError(f"{check.theorem.value} has no {chosen.value} decision path")
    if (sample_stride > 1 or points is not None) and not check.strided:
        raise RangeError(f"{check.theorem.value} must be checked at every index; sampling is not allowed")

    if points is not None:
        indices = sorted(set(points))
        if not indices:
            raise RangeError("no sample points given")
        sample_points(indices[0], indices[-1], 1, check.min_n)
    else:
        indices = sample_points(from_n, to_n, sample_stride, check.min_n)

    table = table if table is not None else shared_table()
    if check.reach is not None:
        table.extend(indices[-1] + check.reach)

    worker = partial(_verify_chunk, check.theorem.value, chosen.value, policy)
    return run_report(check.theorem.value, indices, worker, table=table, jobs=jobs, on_chunk=on_chunk)
