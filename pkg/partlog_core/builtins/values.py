"""Commands that print or export values: p, p-range, hrr, bounds."""

from __future__ import annotations

from argparse import ArgumentParser, Namespace
from pathlib import Path

from partlog_core.api import partlogcommand
from partlog_numeric.bounds import bound_bundle
from partlog_numeric.hrr import hrr_residuals
from partlog_numeric.partitions import write_range

from .base import PartlogCommand, interval_fields, print_interval_table, print_json


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise ValueError(f"expected a nonnegative integer, got {value}")
    return value


@partlogcommand(name="p", group="partlog")
class PartitionCommand(PartlogCommand):
    """Print the exact partition number p(n)."""

    command_name = "p"

    @classmethod
    def configure(cls, parser: ArgumentParser) -> None:
        parser.add_argument("n", type=_nonnegative)
        cls.add_common_arguments(parser)

    def run(self, argv: Namespace) -> int:
        self.apply_settings(argv)
        table = self.app.ensure_partitions(argv.n)
        print(table[argv.n])
        return 0


@partlogcommand(name="p-range", group="partlog")
class PartitionRangeCommand(PartlogCommand):
    """Write n<TAB>p(n) lines for a <= n <= b."""

    command_name = "p-range"

    @classmethod
    def configure(cls, parser: ArgumentParser) -> None:
        parser.add_argument("start", type=_nonnegative)
        parser.add_argument("stop", type=_nonnegative)
        parser.add_argument("--out", metavar="FILE", help="Destination file (default: standard output)")
        cls.add_common_arguments(parser)

    def run(self, argv: Namespace) -> int:
        if argv.stop < argv.start:
            raise ValueError(f"empty range {argv.start}..{argv.stop}")
        self.apply_settings(argv)
        table = self.app.ensure_partitions(argv.stop)
        if argv.out is None:
            for n, value in enumerate(table.values(argv.start, argv.stop), start=argv.start):
                print(f"{n}\t{value}")
            return 0
        count = write_range(Path(argv.out), argv.start, argv.stop, table)
        self.say(f"wrote {count} values to {argv.out}")
        return 0


class _IntervalReportCommand(PartlogCommand):
    @classmethod
    def configure(cls, parser: ArgumentParser) -> None:
        parser.add_argument("n", type=int)
        parser.add_argument("--prec", type=int, metavar="BITS", help="Working precision in bits")
        parser.add_argument("--format", dest="output_format", choices=("text", "json"))
        cls.add_common_arguments(parser)

    def precision(self, argv: Namespace) -> int:
        bits = argv.prec if argv.prec is not None else self.app.settings.prec_init
        if bits < 2:
            raise ValueError(f"precision must be at least 2 bits, got {bits}")
        return bits

    def emit(self, n: int, bits: int, fields: dict) -> None:
        if self.app.settings.output_format == "json":
            print_json({"n": n, "bits": bits, "fields": interval_fields(fields)})
            return
        self.say(f"n={n} bits={bits}")
        print_interval_table(fields)


@partlogcommand(name="hrr", group="partlog")
class HrrCommand(_IntervalReportCommand):
    """Print the HRR decomposition of p(n): mu, T~, T, Lehmer bound, residuals."""

    command_name = "hrr"

    def run(self, argv: Namespace) -> int:
        self.apply_settings(argv)
        if argv.n < 1:
            raise ValueError(f"hrr needs n >= 1, got {argv.n}")
        bits = self.precision(argv)
        table = self.app.ensure_partitions(argv.n)
        decomposition = hrr_residuals(argv.n, bits, table)
        self.emit(argv.n, bits, decomposition.fields())
        return 0


@partlogcommand(name="bounds", group="partlog")
class BoundsCommand(_IntervalReportCommand):
    """Print the closed-form bound bundle B1, B2, envelope, C, D and the reference bounds."""

    command_name = "bounds"

    def run(self, argv: Namespace) -> int:
        self.apply_settings(argv)
        if argv.n < 2:
            raise ValueError(f"bounds need n >= 2, got {argv.n}")
        bits = self.precision(argv)
        self.emit(argv.n, bits, bound_bundle(argv.n, bits).fields())
        return 0
