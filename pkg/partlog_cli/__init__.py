"""Entrypoint wiring for the partlog CLI."""

from .main import main

__all__ = ["main"]
