"""
interpolation - Polarized vocabulary, partitions, interpolants and certificates.
"""

from stlc_interp.interpolation.vocab import (
    Polarity,
    VocabSets,
    constants_vocab,
    vocab,
    vocab_ctx,
)
from stlc_interp.interpolation.partition import (
    Partition,
    Side,
    extend,
    format_tags,
    make_partition,
    parse_tags,
    reverse,
    trivial_partition,
)
from stlc_interp.interpolation.engine import (
    Interpolator,
    NeInterpolant,
    NfInterpolant,
    compose,
    compose_ne,
    interpolate_ne,
    interpolate_nf,
)
from stlc_interp.interpolation.certificate import (
    Certificate,
    ClauseResult,
    Report,
    certificate_digest,
    certify,
    check_constant_tags,
    interpolate_term,
    interpolate_with_constants,
    verify_certificate,
    vocab_report,
)

__all__ = [
    "Polarity",
    "VocabSets",
    "constants_vocab",
    "vocab",
    "vocab_ctx",
    "Partition",
    "Side",
    "extend",
    "format_tags",
    "make_partition",
    "parse_tags",
    "reverse",
    "trivial_partition",
    "Interpolator",
    "NeInterpolant",
    "NfInterpolant",
    "compose",
    "compose_ne",
    "interpolate_ne",
    "interpolate_nf",
    "Certificate",
    "ClauseResult",
    "Report",
    "certificate_digest",
    "certify",
    "check_constant_tags",
    "interpolate_term",
    "interpolate_with_constants",
    "verify_certificate",
    "vocab_report",
]
