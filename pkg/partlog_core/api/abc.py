"""Abstract base class for partlog commands."""

from __future__ import annotations

from abc import ABC, abstractmethod
from argparse import ArgumentParser, Namespace
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from partlog_core.app import PartlogApp


class PartlogAbstractCommand(ABC):
    """Base interface for partlog commands.

    Commands receive the application on construction; when none is given
    they build a default one on first use of ``self.app``.
    """

    def __init__(self, app: "PartlogApp | None" = None) -> None:
        self._app = app

    @property
    def app(self) -> "PartlogApp":
        if self._app is None:
            from partlog_core.app import PartlogApp

            self._app = PartlogApp()
        return self._app

    @classmethod
    @abstractmethod
    def configure(cls, parser: ArgumentParser) -> None:
        """Let the command configure CLI arguments."""

    @abstractmethod
    def run(self, argv: Namespace) -> int:
        """Execute the command with parsed arguments and return the exit code."""
