"""Certified verification of the log-behaviour statements over index ranges."""

from __future__ import annotations

from .aux import AUX_IDS, aux_check, verify_aux_inequality
from .errors import RangeError, UnknownTheoremError, UnsupportedMethodError, VerificationError
from .exact import DiscriminantKind, exact_discriminant
from .theorems import THEOREM_IDS, theorem_check, verify_theorem
from .types import AuxInequalityId, TheoremId, Verdict, VerificationMethod, VerificationReport, VerificationStatus

__all__ = [
    "AUX_IDS",
    "AuxInequalityId",
    "DiscriminantKind",
    "RangeError",
    "THEOREM_IDS",
    "TheoremId",
    "UnknownTheoremError",
    "UnsupportedMethodError",
    "Verdict",
    "VerificationError",
    "VerificationMethod",
    "VerificationReport",
    "VerificationStatus",
    "aux_check",
    "exact_discriminant",
    "theorem_check",
    "verify_aux_inequality",
    "verify_theorem",
]
