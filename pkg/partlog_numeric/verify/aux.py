"""Auxiliary elementary inequalities used inside the larger proofs.

Each check is decided at integer sample points. ``x-series`` is indexed by
``i`` in 1..1000 standing for ``x = i / 48000``; the others are indexed by n
(or x) directly. ``cube-gap`` and ``fraction-sum`` are rational identities and
are decided with exact fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Callable, Sequence

from partlog_numeric import bounds
from partlog_numeric.hrr import mu_at
from partlog_numeric.parallel import ChunkCallback
from partlog_numeric.partitions import PartitionTable, shared_table
from partlog_numeric.rigor import DEFAULT_POLICY, Interval, PrecisionPolicy, exact_sign, iv_const
from partlog_numeric.rigor.interval import GUARD_BITS

from .engine import decide, run_report, sample_points
from .errors import UnknownTheoremError
from .types import AuxInequalityId, Verdict, VerificationReport

__all__ = ["AUX_IDS", "AuxCheck", "X_SERIES_POINTS", "aux_check", "verify_aux_inequality"]

X_SERIES_POINTS = 1000
X_SERIES_DENOMINATOR = 48 * X_SERIES_POINTS


@dataclass(frozen=True)
class AuxCheck:
    inequality: AuxInequalityId
    statement: str
    min_n: int
    interval: Callable[[int, int], Interval] | None = None
    exact: Callable[[int], Fraction] | None = None
    max_n: int | None = None


def _mu_shift(n: int, bits: int) -> Interval:
    wp = bits + GUARD_BITS
    return (mu_at(n, wp) - 1 - 2 * mu_at(n - 2, wp) / 3).rounded(bits)


def _mu_upper(n: int, bits: int) -> Interval:
    wp = bits + GUARD_BITS
    bound = iv_const("pi", wp) / 4 * Interval.from_int(24 * n - 24, wp).sqrt()
    return (bound - (mu_at(n + 1, wp) - 1)).rounded(bits)


def _x_series(i: int, bits: int) -> Interval:
    wp = bits + GUARD_BITS
    x = Interval.from_rational(i, X_SERIES_DENOMINATOR, wp)
    rest = 1 - x
    series = 1 + Fraction(3, 2) * x + Fraction(3, 8) * x * x.sqrt()
    return (series - 1 / (rest * rest.sqrt())).rounded(bits)


def _log_quarter_power(x: int, bits: int) -> Interval:
    wp = bits + GUARD_BITS
    value = Interval.from_int(x, wp)
    return (value.nth_root(4) - value.log()).rounded(bits)


def _exp_poly(x: int, bits: int) -> Interval:
    wp = bits + GUARD_BITS
    return (Interval.from_int(x, wp).exp() - Fraction(x**6, 720)).rounded(bits)


def _cube_gap(n: int) -> Fraction:
    return Fraction(2, (n + 1) ** 3) - Fraction(2, (n - 1) ** 3) + Fraction(12, (n - 1) ** 4)


def _fraction_sum(n: int) -> Fraction:
    m = 24 * n - 25
    return Fraction(324, (n - 1) * m * m) + Fraction(36, (n - 1) ** 2 * m) - Fraction(2, (n - 1) ** 3)


def _exp_decay(n: int, bits: int) -> Interval:
    wp = bits + GUARD_BITS
    decay = 1 / (iv_const("pi", wp) * Interval.from_int(24 * n - 25, wp).sqrt() / 18).exp() / (n - 1)
    return (Fraction(2094, (n - 1) ** 4) - decay).rounded(bits)


def _y_decay(n: int, bits: int) -> Interval:
    wp = bits + GUARD_BITS
    m = mu_at(n, wp)
    third = (m / 3).exp()
    tail = 5 * m * m / (third * third) + 9 / (m / 6).exp()
    return (iv_const("d", wp) * (m - 1) / m - tail).rounded(bits)


def _log_mu_18(n: int, bits: int) -> Interval:
    wp = bits + GUARD_BITS
    return (4 * mu_at(n + 1, wp).log() - 18).rounded(bits)


def _ratio_gap(n: int, bits: int) -> Interval:
    wp = bits + GUARD_BITS
    shifted = Interval.from_int(24 * n - 25, wp)
    leading = 72 * iv_const("pi", wp) / ((n - 1) * shifted * shifted.sqrt())
    gap = leading - bounds.thm32_upper(n, wp)
    return (Fraction(1, (n - 1) ** 3) - gap).rounded(bits)


_CHECKS: dict[AuxInequalityId, AuxCheck] = {
    check.inequality: check
    for check in (
        AuxCheck(AuxInequalityId.MU_SHIFT, "mu(n) - 1 > (2/3) mu(n-2)", 3, interval=_mu_shift),
        AuxCheck(AuxInequalityId.MU_UPPER, "mu(n+1) - 1 < (pi/4) sqrt(24n - 24)", 2, interval=_mu_upper),
        AuxCheck(
            AuxInequalityId.X_SERIES,
            "(1 - x)^(-3/2) < 1 + (3/2) x + (3/8) x^(3/2), x = i/48000",
            1,
            interval=_x_series,
            max_n=X_SERIES_POINTS,
        ),
        AuxCheck(AuxInequalityId.LOG_QUARTER_POWER, "log x < x^(1/4)", 1, interval=_log_quarter_power),
        AuxCheck(AuxInequalityId.EXP_POLY, "e^x > x^6 / 720", 1, interval=_exp_poly),
        AuxCheck(AuxInequalityId.CUBE_GAP, "2/(n+1)^3 - 2/(n-1)^3 > -12/(n-1)^4", 2, exact=_cube_gap),
        AuxCheck(
            AuxInequalityId.FRACTION_SUM,
            "324/((n-1)(24n-25)^2) + 36/((n-1)^2 (24n-25)) > 2/(n-1)^3",
            2,
            exact=_fraction_sum,
        ),
        AuxCheck(
            AuxInequalityId.EXP_DECAY,
            "(1/(n-1)) e^(-pi sqrt(24n-25)/18) < 2094/(n-1)^4",
            2,
            interval=_exp_decay,
        ),
        AuxCheck(
            AuxInequalityId.Y_DECAY,
            "5 mu^2 e^(-2mu/3) + 9 e^(-mu/6) < d (mu - 1)/mu",
            2,
            interval=_y_decay,
        ),
        AuxCheck(AuxInequalityId.LOG_MU_18, "4 log mu(n+1) > 18", 1, interval=_log_mu_18),
        AuxCheck(
            AuxInequalityId.RATIO_GAP,
            "72 pi/((n-1)(24n-25)^(3/2)) - 3 pi/(sqrt(24) n^(5/2) + 3 pi) < 1/(n-1)^3",
            2,
            interval=_ratio_gap,
        ),
    )
}

AUX_IDS = tuple(inequality.value for inequality in AuxInequalityId)


def aux_check(inequality: AuxInequalityId | str) -> AuxCheck:
    try:
        return _CHECKS[AuxInequalityId(inequality)]
    except ValueError:
        raise UnknownTheoremError(str(inequality), AUX_IDS) from None


def _aux_chunk(inequality: str, policy: PrecisionPolicy, chunk: Sequence[int], table: PartitionTable) -> list[Verdict]:
    check = aux_check(inequality)
    if check.exact is not None:
        return [Verdict(n, exact_sign(check.exact(n)), 0) for n in chunk]
    assert check.interval is not None
    return [decide(n, [partial(check.interval, n)], policy) for n in chunk]


def verify_aux_inequality(
    inequality: AuxInequalityId | str,
    from_n: int,
    to_n: int,
    policy: PrecisionPolicy = DEFAULT_POLICY,
    sample_stride: int = 1,
    *,
    jobs: int = 1,
    on_chunk: ChunkCallback | None = None,
) -> VerificationReport:
    """Decide an auxiliary inequality at every sampled index and report."""

    check = aux_check(inequality)
    points = sample_points(from_n, to_n, sample_stride, check.min_n, check.max_n)
    worker = partial(_aux_chunk, check.inequality.value, policy)
    return run_report(check.inequality.value, points, worker, table=shared_table(), jobs=jobs, on_chunk=on_chunk)
