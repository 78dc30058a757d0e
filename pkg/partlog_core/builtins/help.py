"""The help command; the CLI renders the overview after it runs."""

from __future__ import annotations

from argparse import ArgumentParser, Namespace

from partlog_core.api import PartlogAbstractCommand, partlogcommand


@partlogcommand(name="help", group="partlog")
class HelpCommand(PartlogAbstractCommand):
    """Display the list of available commands."""

    long_format = False

    @classmethod
    def configure(cls, parser: ArgumentParser) -> None:
        parser.add_argument(
            "--long",
            action="store_true",
            dest="long_format",
            help="Show detailed help about each command.",
        )

    def run(self, argv: Namespace) -> int:
        self.long_format = bool(getattr(argv, "long_format", False))
        return 0
