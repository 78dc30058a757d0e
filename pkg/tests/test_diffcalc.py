"""Unit tests for finite differences of log-quantities and the limit tables."""

from __future__ import annotations

import random
from fractions import Fraction

import mpmath
import pytest

from partlog_numeric.diffcalc import (
    LIMIT_TABLES,
    LogQuantityKind,
    delta,
    limit_table,
    parse_grid,
    quantity,
    raw_delta,
    width_target_met,
)
from partlog_numeric.partitions import PartitionTable
from partlog_numeric.rigor import Interval, PrecisionExhaustedError, iv_const


@pytest.fixture()
def table() -> PartitionTable:
    values = PartitionTable()
    values.extend(1200)
    return values


def _log_p(table: PartitionTable, n: int) -> mpmath.mpf:
    return mpmath.log(table[n])


def test_second_difference_uses_centre_convention(table: PartitionTable) -> None:
    n = 100
    with mpmath.workdps(60):
        reference = _log_p(table, n + 1) + _log_p(table, n - 1) - 2 * _log_p(table, n)
    enclosure = raw_delta(LogQuantityKind.LOG_P, 2, n, 128, table)
    assert enclosure.lo <= reference <= enclosure.hi
    assert enclosure.is_negative()


def test_third_difference_uses_centre_convention(table: PartitionTable) -> None:
    n = 300
    with mpmath.workdps(80):
        reference = (
            _log_p(table, n + 2) - 3 * _log_p(table, n + 1) + 3 * _log_p(table, n) - _log_p(table, n - 1)
        )
    enclosure = raw_delta("log_p", 3, n, 160, table)
    assert enclosure.lo <= reference <= enclosure.hi
    assert enclosure.is_positive()


@pytest.mark.parametrize("kind", list(LogQuantityKind))
def test_every_kind_evaluates(kind: LogQuantityKind, table: PartitionTable) -> None:
    value = quantity(kind, 50, 96, table)
    assert value.bits == 96
    assert raw_delta(kind, 2, 50, 96, table).bits == 96


def test_nthroot_quantity_matches_reference(table: PartitionTable) -> None:
    with mpmath.workdps(50):
        reference = _log_p(table, 77) / 77
    value = quantity(LogQuantityKind.NTHROOT_LOG_P, 77, 128, table)
    assert value.lo <= reference <= value.hi


def test_argument_validation(table: PartitionTable) -> None:
    with pytest.raises(ValueError):
        raw_delta(LogQuantityKind.LOG_P, 4, 10, 64, table)
    with pytest.raises(ValueError):
        raw_delta(LogQuantityKind.LOG_P, 2, 1, 64, table)
    with pytest.raises(ValueError):
        quantity(LogQuantityKind.LOG_P, 0, 64, table)
    with pytest.raises(ValueError):
        quantity("log_q", 5, 64, table)


def test_width_target_is_exact() -> None:
    n = 4
    # target width is 4^(-5/2) / 8 = 1/256
    narrow = Interval.from_int(0, 64) + Interval.from_rational(0, 1, 64)
    assert width_target_met(narrow, n)
    wide = Interval(Interval.from_int(0, 64).lower, Interval.from_rational(1, 256, 64).upper, 64)
    assert not width_target_met(wide, n)
    just_inside = Interval(Interval.from_int(0, 64).lower, Interval.from_rational(1, 257, 64).upper, 64)
    assert width_target_met(just_inside, n)


def test_delta_meets_width_target(table: PartitionTable) -> None:
    result = delta(LogQuantityKind.NTHROOT_LOG_P, 2, 1000, 24, table)
    assert result.converged
    assert result.bits >= 24
    assert width_target_met(result.interval, 1000)
    assert result.center == 1000 and result.order == 2


def test_delta_reports_non_convergence(table: PartitionTable) -> None:
    result = delta(LogQuantityKind.NTHROOT_LOG_P, 2, 1000, 8, table, max_bits=8)
    assert not result.converged
    assert result.bits == 8


def test_limit_table_rows_approach_targets() -> None:
    values = PartitionTable()
    for which in LIMIT_TABLES:
        rows = limit_table(which, [100, 1000, 5000], 96, values)
        assert [row.n for row in rows] == [100, 1000, 5000]
        target = iv_const(which, 96)
        deviations = [row.abs_dev for row in rows]
        assert deviations == sorted(deviations, reverse=True)
        for row in rows:
            assert row.target == target
            assert row.value.hi < target.lo
            assert row.value_lo <= row.value_hi


def test_pi24_row_tracks_asymptotic_correction() -> None:
    # n^(3/2) times minus the second difference is about pi/sqrt(24) - 1/sqrt(n)
    (row,) = limit_table("pi24", [10_000], 96, PartitionTable())
    assert float(row.abs_dev) == pytest.approx(0.01, rel=0.05)


def test_limit_table_validation() -> None:
    with pytest.raises(ValueError):
        limit_table("zeta", [10], 64)
    with pytest.raises(ValueError):
        limit_table("pi24", [1, 10], 64)
    with pytest.raises(ValueError):
        limit_table("pi24", [10, 10], 64)
    assert limit_table("alpha", [], 64) == []


def test_limit_table_raises_when_precision_is_exhausted() -> None:
    with pytest.raises(PrecisionExhaustedError):
        limit_table("alpha", [1000], 8, PartitionTable(), max_bits=8)


@pytest.mark.parametrize(
    ("spec", "expected"),
    [
        ("10,20,30", [10, 20, 30]),
        ("30, 10,10", [10, 30]),
        ("geometric:100:1000:2", [100, 200, 400, 800]),
        ("geometric:10:100:1.5", [10, 15, 22, 34, 51, 76]),
        ("geometric:5:5:3", [5]),
    ],
)
def test_parse_grid(spec: str, expected: list[int]) -> None:
    assert parse_grid(spec) == expected


@pytest.mark.parametrize(
    "spec",
    ["", "geometric:10:5:2", "geometric:10:100:1", "geometric:10:100", "1,two,3", "geometric:0:10:2"],
)
def test_parse_grid_rejects_malformed_specs(spec: str) -> None:
    with pytest.raises(ValueError):
        parse_grid(spec)


def test_geometric_points_use_exact_factor() -> None:
    assert parse_grid("geometric:1000:1331:1.1") == [1000, 1100, 1210, 1331]
    assert Fraction("1.1") ** 3 * 1000 == 1331


def _overlap(left: Interval, right: Interval) -> bool:
    return left.lower_fraction() <= right.upper_fraction() and right.lower_fraction() <= left.upper_fraction()


def _log_t_tilde_reference(n: int) -> mpmath.mpf:
    m = mpmath.pi / 6 * mpmath.sqrt(24 * n - 1)
    d = mpmath.pi**2 / (6 * mpmath.sqrt(3))
    return mpmath.log(d / m**2 * (1 - 1 / m)) + m


@pytest.mark.parametrize("n", [2, 50, 777, 1100])
def test_decomposed_kinds_enclose_references(n: int, table: PartitionTable) -> None:
    with mpmath.workdps(80):
        log_t = _log_t_tilde_reference(n)
        log_n = mpmath.log(n)
        references = {
            LogQuantityKind.B_TILDE: (log_t - log_n) / n,
            LogQuantityKind.E_TILDE: (_log_p(table, n) - log_t) / n,
            LogQuantityKind.NTHROOT_LOG_N: log_n / n,
            LogQuantityKind.NTHROOT_LOG_T: log_t / n,
            LogQuantityKind.LOG_R: (_log_p(table, n) - log_n) / n,
        }
    for kind, reference in references.items():
        value = quantity(kind, n, 128, table)
        assert value.lo <= reference <= value.hi, kind


def test_e_tilde_is_exponentially_small(table: PartitionTable) -> None:
    for n in (40, 200, 1000):
        with mpmath.workdps(30):
            bound = 2 * mpmath.exp(-mpmath.pi * mpmath.sqrt(24 * n - 1) / 18) / n
        assert quantity(LogQuantityKind.E_TILDE, n, 96, table).abs_upper() < bound


def test_second_difference_of_log_n_over_n(table: PartitionTable) -> None:
    for n in (5, 60, 900):
        with mpmath.workdps(60):
            reference = mpmath.log(n + 1) / (n + 1) + mpmath.log(n - 1) / (n - 1) - 2 * mpmath.log(n) / n
        enclosure = raw_delta(LogQuantityKind.NTHROOT_LOG_N, 2, n, 128, table)
        assert enclosure.lo <= reference <= enclosure.hi
        assert enclosure.is_positive()


def test_log_r_difference_splits_into_b_tilde_and_e_tilde(table: PartitionTable) -> None:
    for n in range(40, 1001):
        whole = raw_delta(LogQuantityKind.LOG_R, 2, n, 128, table)
        parts = raw_delta(LogQuantityKind.B_TILDE, 2, n, 128, table) + raw_delta(
            LogQuantityKind.E_TILDE, 2, n, 128, table
        )
        assert _overlap(whole, parts), n
        if n >= 61:
            assert whole.is_positive(), n


@pytest.mark.parametrize(
    ("whole", "first", "second", "sign"),
    [
        (LogQuantityKind.NTHROOT_LOG_T, LogQuantityKind.B_TILDE, LogQuantityKind.NTHROOT_LOG_N, 1),
        (LogQuantityKind.NTHROOT_LOG_P, LogQuantityKind.NTHROOT_LOG_T, LogQuantityKind.E_TILDE, 1),
        (LogQuantityKind.LOG_R, LogQuantityKind.NTHROOT_LOG_P, LogQuantityKind.NTHROOT_LOG_N, -1),
    ],
)
@pytest.mark.parametrize("order", [2, 3])
def test_delta_is_linear_across_decomposable_kinds(
    whole: LogQuantityKind,
    first: LogQuantityKind,
    second: LogQuantityKind,
    sign: int,
    order: int,
    table: PartitionTable,
) -> None:
    rng = random.Random(f"linearity-{whole.value}-{order}")
    for n in rng.sample(range(2, 1190), 50):
        left = delta(whole, order, n, 64, table).interval
        right = delta(first, order, n, 64, table).interval + sign * delta(second, order, n, 64, table).interval
        assert _overlap(left, right), (n, order)


def test_limit_tables_reach_five_percent_at_one_hundred_thousand() -> None:
    values = PartitionTable()
    grid = [1000, 10_000, 100_000]
    for which in LIMIT_TABLES:
        rows = limit_table(which, grid, 96, values)
        target = iv_const(which, 96).mid()
        deviations = [row.abs_dev for row in rows]
        assert deviations[0] > deviations[1] > deviations[2], which
        assert deviations[2] < target / 20, which
