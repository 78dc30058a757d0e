"""Exact partition numbers and certified checks of their log-behaviour."""

from __future__ import annotations

__version__ = "0.1.0"
