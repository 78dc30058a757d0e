"""partlog CLI entrypoint backed by the command registry."""

from __future__ import annotations

import argparse
import inspect
import logging
import sys
from pathlib import Path
from typing import Iterable, Sequence

from partlog_core.app import PartlogApp
from partlog_core.events import STANDARD_EVENTS, Event
from partlog_core.registry import FeatureNotFoundError, RegistryEntry
from partlog_numeric import __version__
from partlog_numeric.partitions import PartitionCacheError
from partlog_numeric.rigor import PrecisionExhaustedError, RigorError
from partlog_numeric.verify import VerificationError

CLI_VERSION = __version__

EXIT_OK = 0
EXIT_INDETERMINATE = 2
EXIT_USAGE = 3

logger = logging.getLogger("partlog_cli")


def main(
    argv: Sequence[str] | None = None,
    *,
    project_dir: Path | str | None = None,
) -> int:
    """Resolve and run a partlog command."""

    tokens = list(argv) if argv is not None else list(sys.argv[1:])
    if not tokens or tokens[0] in ("-h", "--help"):
        return _print_overview(project_dir=project_dir)

    if len(tokens) == 1 and tokens[0] in ("--version", "-V"):
        print(f"partlog v{CLI_VERSION}")
        return EXIT_OK

    app = PartlogApp(project_dir=project_dir)
    app.bootstrap()
    registry = app.feature_registry
    entries = list(registry.entries())

    spec, command_args = _extract_command_spec(tokens)
    try:
        entry = registry.resolve(spec)
    except FeatureNotFoundError as exc:
        print(f"{exc}\nUsage: partlog <command> [args...]", file=sys.stderr)
        return EXIT_USAGE

    parser = argparse.ArgumentParser(prog=f"partlog {entry.name}", description=_command_description(entry))
    entry.target.configure(parser)
    try:
        parsed_args = parser.parse_args(command_args)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    command = entry.target(app)
    try:
        _configure_logging(getattr(parsed_args, "log_level", None) or app.settings.log_level)
        _subscribe_event_logging(app)
        result = command.run(parsed_args)
    except PrecisionExhaustedError as exc:
        print(f"[partlog:{entry.name}] indeterminate: {exc}", file=sys.stderr)
        return EXIT_INDETERMINATE
    except (ValueError, OSError, PartitionCacheError, RigorError, VerificationError) as exc:
        print(f"[partlog:{entry.name}] error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if entry.group == "partlog" and entry.name == "help":
        return _print_overview(entries=entries, include_long=getattr(command, "long_format", False))

    return to_int(result)


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(level.upper())


def _subscribe_event_logging(app: PartlogApp) -> None:
    def log_event(event: Event) -> None:
        logger.debug("event %s %s", event.name, event.payload)

    for name in STANDARD_EVENTS:
        app.events.on(name, log_event, priority=-100)


def _print_overview(
    *,
    project_dir: Path | str | None = None,
    entries: Iterable[RegistryEntry] | None = None,
    include_long: bool = False,
) -> int:
    """Show the global help listing."""

    if entries is None:
        app = PartlogApp(project_dir=project_dir)
        app.bootstrap()
        entries = app.feature_registry.entries()

    print("Usage: partlog <command> [args...]\n")
    print("Commands:")
    for entry in sorted(entries, key=lambda item: item.name):
        lines = _command_description(entry).splitlines()
        short = lines[0] if lines else ""
        print(f"  {entry.name:<12} {short}")
        if include_long and len(lines) > 1:
            for extra in lines[1:]:
                print(f"    {extra}")
    print("\nRun 'partlog <command> --help' for the options of a command.")
    return EXIT_OK


def _command_description(entry: RegistryEntry) -> str:
    doc = inspect.getdoc(entry.target) or ""
    return doc.strip()


def _extract_command_spec(args: Sequence[str]) -> tuple[str, list[str]]:
    first, *rest = args
    return first, list(rest)


def to_int(result: int | None) -> int:
    return EXIT_OK if result is None else result
