"""
stlc_interp - Simply-typed lambda-calculus with sums and proof-relevant interpolation.

Typing, β and commuting-conversion normalization, bidirectional normal
forms, and Lyndon interpolants of normal forms packaged as certificates
that can be re-checked independently.
"""

__version__ = "0.3.0"

from stlc_interp.errors import (
    FuelExhaustedError,
    InvariantViolationError,
    StlcError,
    TypeCheckError,
)
from stlc_interp.syntax.types import Language
from stlc_interp.typecheck import check, infer
from stlc_interp.reduction.normalize import normalize, normalize_traced
from stlc_interp.bidir import check_nf, infer_ne
from stlc_interp.interpolation.partition import Partition, Side, make_partition
from stlc_interp.interpolation.certificate import (
    Certificate,
    certify,
    interpolate_term,
    interpolate_with_constants,
    verify_certificate,
)

__all__ = [
    # Core
    "Language",
    "check",
    "infer",
    "normalize",
    "normalize_traced",
    "check_nf",
    "infer_ne",
    # Interpolation
    "Partition",
    "Side",
    "make_partition",
    "Certificate",
    "certify",
    "interpolate_term",
    "interpolate_with_constants",
    "verify_certificate",
    # Errors
    "StlcError",
    "TypeCheckError",
    "FuelExhaustedError",
    "InvariantViolationError",
]
