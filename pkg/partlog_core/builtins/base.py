"""Shared option handling and output helpers for the built-in commands."""

from __future__ import annotations

import json
import sys
from argparse import ArgumentParser, Namespace
from typing import Any, Mapping

from partlog_core.api import PartlogAbstractCommand
from partlog_core.config import LOG_LEVELS, Settings
from partlog_numeric.rigor import Interval

# Namespace attribute -> settings key
_OVERRIDES = {
    "cache": "cache_path",
    "log_level": "log_level",
    "prec_init": "prec_init",
    "prec_max": "prec_max",
    "jobs": "jobs",
    "output_format": "output_format",
}


class PartlogCommand(PartlogAbstractCommand):
    """Base for commands that honour ``--cache``, ``--no-cache`` and ``--log-level``."""

    command_name = "partlog"

    @classmethod
    def add_common_arguments(cls, parser: ArgumentParser) -> None:
        parser.add_argument("--cache", metavar="PATH", help="Partition cache file (default: ./partlog-cache.txt)")
        parser.add_argument("--no-cache", action="store_true", help="Compute in memory without touching the cache")
        parser.add_argument("--log-level", choices=LOG_LEVELS, type=str.upper, help="Logging threshold")

    def apply_settings(self, args: Namespace) -> Settings:
        overrides: dict[str, str | None] = {}
        for attribute, key in _OVERRIDES.items():
            value = getattr(args, attribute, None)
            if value is not None:
                overrides[key] = str(value)
        if getattr(args, "no_cache", False):
            overrides["use_cache"] = "false"
        return self.app.configure(overrides)

    def say(self, message: str) -> None:
        print(f"[partlog:{self.command_name}] {message}")

    def warn(self, message: str) -> None:
        print(f"[partlog:{self.command_name}] {message}", file=sys.stderr)


def interval_fields(values: Mapping[str, Interval]) -> dict[str, dict[str, str]]:
    return {
        name: {
            "lo": value.format_lo(),
            "hi": value.format_hi(),
            "mid": value.format_mid(),
            "width": value.format_width(),
        }
        for name, value in values.items()
    }


def print_json(payload: Any) -> None:
    print(json.dumps(payload, indent=2))


def print_interval_table(values: Mapping[str, Interval]) -> None:
    width = max(len(name) for name in values)
    for name, value in values.items():
        print(f"  {name:<{width}}  mid={value.format_mid()}  width={value.format_width()}")
