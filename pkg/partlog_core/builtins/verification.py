"""Commands that certify statements and tabulate limits: verify, aux, table."""

from __future__ import annotations

import csv
import sys
from argparse import ArgumentParser, Namespace
from contextlib import nullcontext
from pathlib import Path
from typing import IO

from partlog_core.api import partlogcommand
from partlog_core.events import VERIFY_FINISHED, VERIFY_STARTED
from partlog_numeric.diffcalc import LIMIT_TABLES, limit_table, parse_grid
from partlog_numeric.rigor import format_upward
from partlog_numeric.verify import (
    AUX_IDS,
    THEOREM_IDS,
    VerificationMethod,
    VerificationReport,
    theorem_check,
    verify_aux_inequality,
    verify_theorem,
)

from .base import PartlogCommand

CSV_HEADER = ("n", "value_lo", "value_hi", "target", "abs_dev")
_PREVIEW = 20


class _ReportingCommand(PartlogCommand):
    @classmethod
    def add_range_arguments(cls, parser: ArgumentParser) -> None:
        parser.add_argument("--from", dest="from_n", type=int, required=True, metavar="A")
        parser.add_argument("--to", dest="to_n", type=int, required=True, metavar="B")
        parser.add_argument("--stride", type=int, default=1, metavar="K", help="Check every K-th index")
        parser.add_argument("--prec-init", type=int, metavar="BITS")
        parser.add_argument("--prec-max", type=int, metavar="BITS")
        parser.add_argument("--jobs", type=int, metavar="J")
        cls.add_common_arguments(parser)

    def report(self, report: VerificationReport) -> int:
        self.say(
            f"{report.theorem} [{report.from_n}, {report.to_n}]: {report.status.value} "
            f"(failures={len(report.failures)} indeterminate={len(report.indeterminates)} "
            f"max_bits={report.max_bits_used} time={report.wall_time_ms}ms)"
        )
        if report.failures:
            self.say(f"failures: {_preview(report.failures)}")
        if report.indeterminates:
            self.say(f"indeterminate: {_preview(report.indeterminates)}")
        return report.exit_code


def _preview(indices: tuple[int, ...]) -> str:
    shown = ", ".join(str(n) for n in indices[:_PREVIEW])
    if len(indices) > _PREVIEW:
        shown += f", ... ({len(indices) - _PREVIEW} more)"
    return shown


@partlogcommand(name="verify", group="partlog")
class VerifyCommand(_ReportingCommand):
    """Certify a statement at every index of a range and report failures.

    Exit status: 0 verified, 1 counterexample found, 2 precision exhausted.
    """

    command_name = "verify"

    @classmethod
    def configure(cls, parser: ArgumentParser) -> None:
        parser.add_argument("theorem", choices=THEOREM_IDS)
        cls.add_range_arguments(parser)
        parser.add_argument("--grid", metavar="SPEC", help="Sample points instead of the range (sampled checks only)")
        parser.add_argument("--method", choices=[method.value for method in VerificationMethod])
        parser.add_argument("--json", dest="json_path", metavar="FILE", help="Write the report as JSON")

    def run(self, argv: Namespace) -> int:
        settings = self.apply_settings(argv)
        check = theorem_check(argv.theorem)
        points = None
        if argv.grid:
            points = [n for n in parse_grid(argv.grid) if argv.from_n <= n <= argv.to_n]
        if check.reach is None:
            table = self.app.partition_table
        else:
            last = max(points) if points else argv.to_n
            table = self.app.ensure_partitions(last + check.reach)

        events = self.app.events
        events.emit(VERIFY_STARTED, {"label": argv.theorem, "from": argv.from_n, "to": argv.to_n})
        report = verify_theorem(
            argv.theorem,
            argv.from_n,
            argv.to_n,
            settings.policy(),
            table,
            argv.stride,
            method=argv.method,
            jobs=settings.jobs,
            points=points,
            on_chunk=events.chunk_reporter(argv.theorem),
        )
        events.emit(VERIFY_FINISHED, {"label": argv.theorem, "report": report.to_dict()})
        if argv.json_path:
            Path(argv.json_path).write_text(report.to_json() + "\n", encoding="utf-8")
        return self.report(report)


@partlogcommand(name="aux", group="partlog")
class AuxCommand(_ReportingCommand):
    """Certify an auxiliary elementary inequality over a range."""

    command_name = "aux"

    @classmethod
    def configure(cls, parser: ArgumentParser) -> None:
        parser.add_argument("inequality", choices=AUX_IDS)
        cls.add_range_arguments(parser)

    def run(self, argv: Namespace) -> int:
        settings = self.apply_settings(argv)
        events = self.app.events
        events.emit(VERIFY_STARTED, {"label": argv.inequality, "from": argv.from_n, "to": argv.to_n})
        report = verify_aux_inequality(
            argv.inequality,
            argv.from_n,
            argv.to_n,
            settings.policy(),
            argv.stride,
            jobs=settings.jobs,
            on_chunk=events.chunk_reporter(argv.inequality),
        )
        events.emit(VERIFY_FINISHED, {"label": argv.inequality, "report": report.to_dict()})
        return self.report(report)


@partlogcommand(name="table", group="partlog")
class TableCommand(PartlogCommand):
    """Tabulate the scaled second differences converging to pi/sqrt(24) or alpha as CSV."""

    command_name = "table"

    @classmethod
    def configure(cls, parser: ArgumentParser) -> None:
        parser.add_argument("which", choices=LIMIT_TABLES)
        parser.add_argument("--grid", required=True, metavar="SPEC", help="'a,b,c' or 'geometric:a:b:f'")
        parser.add_argument("--csv", dest="csv_path", metavar="FILE", help="Destination (default: standard output)")
        parser.add_argument("--prec", type=int, metavar="BITS")
        parser.add_argument("--jobs", type=int, metavar="J")
        cls.add_common_arguments(parser)

    def run(self, argv: Namespace) -> int:
        settings = self.apply_settings(argv)
        grid = parse_grid(argv.grid)
        bits = argv.prec if argv.prec is not None else settings.prec_init
        table = self.app.ensure_partitions(grid[-1] + 2)
        rows = limit_table(argv.which, grid, bits, table, jobs=settings.jobs, max_bits=settings.prec_max)

        target = Path(argv.csv_path).open("w", encoding="utf-8", newline="") if argv.csv_path else None
        with target if target is not None else nullcontext(sys.stdout) as handle:
            _write_rows(handle, rows)
        if argv.csv_path:
            self.say(f"wrote {len(rows)} rows to {argv.csv_path}")
        return 0


def _write_rows(handle: IO[str], rows: list) -> None:
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(
            (
                row.n,
                row.value.format_lo(),
                row.value.format_hi(),
                row.target.format_mid(),
                format_upward(row.abs_dev),
            )
        )
