"""Command registry exports."""

from .entry import RegistryEntry
from .errors import FeatureCollisionError, FeatureNotFoundError, FeatureRegistryError
from .registry import FeatureRegistry

__all__ = [
    "FeatureCollisionError",
    "FeatureNotFoundError",
    "FeatureRegistry",
    "FeatureRegistryError",
    "RegistryEntry",
]
