"""Command API: the abstract base and the registration decorator."""

from .abc import PartlogAbstractCommand
from .decorators import FEATURE_ATTRIBUTE, partlogcommand

__all__ = ["FEATURE_ATTRIBUTE", "PartlogAbstractCommand", "partlogcommand"]
