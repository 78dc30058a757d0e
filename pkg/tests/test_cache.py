"""Unit tests for the append-only partition cache file."""

from __future__ import annotations

from pathlib import Path

import pytest

from partlog_numeric.partitions import (
    CACHE_HEADER,
    CacheFormatError,
    CacheMismatchError,
    PartitionTable,
    cache_sync,
    load_cache,
    write_range,
)


def _lines(path: Path) -> list[str]:
    return path.read_text(encoding="utf-8").splitlines()


def test_sync_creates_file_with_header(tmp_path: Path) -> None:
    path = tmp_path / "cache.txt"
    table = cache_sync(path, 5, PartitionTable())
    assert table.max_n >= 5
    assert _lines(path) == [CACHE_HEADER, "0\t1", "1\t1", "2\t2", "3\t3", "4\t5", "5\t7"]


def test_sync_appends_only_missing_suffix(tmp_path: Path) -> None:
    path = tmp_path / "cache.txt"
    cache_sync(path, 3, PartitionTable())
    cache_sync(path, 6, PartitionTable())
    lines = _lines(path)
    assert lines[0] == CACHE_HEADER
    assert [line.split("\t")[0] for line in lines[1:]] == [str(n) for n in range(7)]
    assert lines[-1] == "6\t11"


def test_sync_below_stored_prefix_is_a_no_op(tmp_path: Path) -> None:
    path = tmp_path / "cache.txt"
    cache_sync(path, 10, PartitionTable())
    before = path.read_text(encoding="utf-8")
    cache_sync(path, 4, PartitionTable())
    assert path.read_text(encoding="utf-8") == before


def test_load_cache_round_trips_values(tmp_path: Path) -> None:
    path = tmp_path / "cache.txt"
    cache_sync(path, 100, PartitionTable())
    table = load_cache(path)
    assert table.max_n == 100
    assert table[100] == 190569292


def test_missing_file_loads_as_empty_table(tmp_path: Path) -> None:
    assert load_cache(tmp_path / "absent.txt").max_n == 0


@pytest.mark.parametrize(
    ("content", "reason"),
    [
        ("0\t1\n", "missing cache header"),
        ("#partlog-cache v9\n0\t1\n", "unsupported cache version"),
        (CACHE_HEADER + "\n0\t1\n1\t1", "not newline-terminated"),
        (CACHE_HEADER + "\n0\t1\n2\t2\n", "expected index 1"),
        (CACHE_HEADER + "\n0\t1\n1 1\n", "expected 'n<TAB>value'"),
        (CACHE_HEADER + "\n0\t1\n1\t-1\n", "not a decimal integer"),
    ],
)
def test_malformed_cache_is_rejected(tmp_path: Path, content: str, reason: str) -> None:
    path = tmp_path / "cache.txt"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(CacheFormatError) as excinfo:
        load_cache(path)
    assert reason in excinfo.value.reason


def test_corrupted_value_is_detected_against_memory(tmp_path: Path) -> None:
    path = tmp_path / "cache.txt"
    path.write_text(CACHE_HEADER + "\n0\t1\n1\t1\n2\t2\n3\t4\n", encoding="utf-8")
    table = PartitionTable()
    table.extend(10)
    with pytest.raises(CacheMismatchError) as excinfo:
        cache_sync(path, 10, table)
    assert excinfo.value.index == 3


def test_write_range_emits_tab_separated_lines(tmp_path: Path) -> None:
    path = tmp_path / "range.tsv"
    count = write_range(path, 98, 100, PartitionTable())
    assert count == 3
    assert _lines(path) == ["98\t150198136", "99\t169229875", "100\t190569292"]


def test_write_range_rejects_empty_range(tmp_path: Path) -> None:
    with pytest.raises(ValueError):
        write_range(tmp_path / "x.tsv", 5, 4, PartitionTable())
