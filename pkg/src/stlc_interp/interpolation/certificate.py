"""
certificate.py - Interpolation certificates and their verification.

A certificate records the input (language, partition, t, T), the normal
form of t with the trace that reached it, the interpolant (M, l, r),
the composite of l and r in the full context, and the trace normalizing
the composite. Verification re-checks every claim from scratch and
never searches: traces are replayed step by step.

Failing clauses are reported, not raised.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any

from stlc_interp.bidir import check_nf
from stlc_interp.config import CERTIFICATE_FORMAT_VERSION, DEFAULT_FUEL
from stlc_interp.errors import LanguageError, StlcError, TypeCheckError, UntaggedConstantError
from stlc_interp.interpolation.engine import Interpolator, compose
from stlc_interp.interpolation.partition import Partition, Side, trivial_partition
from stlc_interp.interpolation.vocab import (
    Polarity,
    VocabSets,
    constants_vocab,
    vocab,
    vocab_ctx,
)
from stlc_interp.invariants import Invariants
from stlc_interp.metrics import EngineLogger
from stlc_interp.reduction.normalize import TraceStep, normalize, normalize_traced, replay
from stlc_interp.surface.sexpr import language_lines, print_term, print_type
from stlc_interp.syntax.context import Context
from stlc_interp.syntax.terms import Term, constants_of, size
from stlc_interp.syntax.types import Language, Type
from stlc_interp.typecheck import infer
from stlc_interp.utils.hashing import content_digest, digests_match

logger = logging.getLogger(__name__)
_events = EngineLogger(__name__)


@dataclass(frozen=True)
class Certificate:
    lang: Language
    partition: Partition
    term: Term
    type: Type
    normal_form: Term
    source_trace: tuple[TraceStep, ...]
    M: Type
    l: Term
    r: Term
    composite: Term
    trace: tuple[TraceStep, ...]

    @property
    def context(self) -> Context:
        return self.partition.context

    def side_constants(self, side: Side) -> list[str]:
        return self.partition.constants_on(side, list(self.lang.constants))

    @property
    def source_language(self) -> Language:
        return self.lang.restrict(self.side_constants(Side.SOURCE))

    @property
    def target_language(self) -> Language:
        return self.lang.restrict(self.side_constants(Side.TARGET))


@dataclass(frozen=True, slots=True)
class ClauseResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Report:
    clauses: tuple[ClauseResult, ...]

    @property
    def passed(self) -> bool:
        return all(clause.passed for clause in self.clauses)

    @property
    def failed(self) -> list[str]:
        return [clause.name for clause in self.clauses if not clause.passed]

    def __getitem__(self, name: str) -> ClauseResult:
        for clause in self.clauses:
            if clause.name == name:
                return clause
        raise KeyError(name)

    def as_dict(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "clauses": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.clauses
            ],
        }


# =============================================================================
# Construction
# =============================================================================

def certify(
    lang: Language, partition: Partition, t: Term, ty: Type, fuel: int = DEFAULT_FUEL
) -> Certificate:
    """
    Normalize t, interpolate its normal form across the partition and
    record everything needed to re-check the result.

    Raises:
        TypeCheckError: t does not have type ty over the partition's context
        FuelExhaustedError: t does not normalize within fuel
    """
    ctx = partition.context
    actual = infer(lang, ctx, t)
    if actual != ty:
        raise TypeCheckError(
            f"Term has type {print_type(actual)}, expected {print_type(ty)}", (), t
        )
    Invariants.assert_partition_renamings(lang, partition)

    source = normalize_traced(lang, ctx, t, fuel)
    interpolator = Interpolator(lang)
    result = interpolator.nf(partition, source.term, ty)
    composite = compose(partition, result.l, result.r)

    try:
        trace = normalize_traced(lang, ctx, composite, fuel).trace
    except StlcError as exc:
        # Left for verification to report.
        logger.error("Composite does not normalize: %s", exc)
        trace = ()

    _events.interpolation_completed(
        print_type(result.M), size(result.l) + size(result.r), dict(interpolator.heads)
    )
    return Certificate(
        lang=lang,
        partition=partition,
        term=t,
        type=ty,
        normal_form=source.term,
        source_trace=source.trace,
        M=result.M,
        l=result.l,
        r=result.r,
        composite=composite,
        trace=trace,
    )


def interpolate_term(
    lang: Language, ctx: Context, t: Term, ty: Type, fuel: int = DEFAULT_FUEL
) -> Certificate:
    """Interpolate with the whole context on the source side."""
    return certify(lang, trivial_partition(ctx), t, ty, fuel)


def check_constant_tags(lang: Language, const_tags: Mapping[str, Side]) -> None:
    """
    Raises:
        LanguageError: a tagged name is not a constant of lang
        UntaggedConstantError: some constant of lang has no side
    """
    unknown = sorted(set(const_tags) - set(lang.constants))
    if unknown:
        raise LanguageError(f"Tagged names are not constants: {', '.join(unknown)}", unknown[0])
    missing = sorted(set(lang.constants) - set(const_tags))
    if missing:
        raise UntaggedConstantError(missing)


def interpolate_with_constants(
    lang: Language,
    const_tags: Mapping[str, Side],
    ctx: Context,
    t: Term,
    ty: Type,
    fuel: int = DEFAULT_FUEL,
) -> Certificate:
    """
    Interpolate with the constants split between the two sides.

    Raises:
        UntaggedConstantError: some constant of lang has no side
        LanguageError: a tagged name is not a constant of lang
    """
    check_constant_tags(lang, const_tags)
    return certify(lang, trivial_partition(ctx, const_tags), t, ty, fuel)


# =============================================================================
# Content and digest
# =============================================================================

def vocab_bounds(cert: Certificate) -> tuple[VocabSets, VocabSets]:
    """Vocabularies of the source side (Γ_s, C_s) and target side (Γ_t, C_t)."""
    p = cert.partition
    source = vocab_ctx(p.source_context) | constants_vocab(cert.lang, cert.side_constants(Side.SOURCE))
    target = vocab_ctx(p.target_context) | constants_vocab(cert.lang, cert.side_constants(Side.TARGET))
    return source, target


def vocab_report(cert: Certificate) -> dict[str, dict[str, list[str]]]:
    source, target = vocab_bounds(cert)
    return {
        "M": vocab(cert.M).as_dict(),
        "source": source.as_dict(),
        "target": target.as_dict(),
        "type": vocab(cert.type).as_dict(),
    }


def trace_content(trace: tuple[TraceStep, ...]) -> list[dict[str, Any]]:
    return [
        {"rule": s.redex.rule.value, "path": list(s.redex.path), "term": print_term(s.result)}
        for s in trace
    ]


def certificate_content(cert: Certificate) -> dict[str, Any]:
    """Every field the digest covers, in printed form."""
    p = cert.partition
    return {
        "format_version": CERTIFICATE_FORMAT_VERSION,
        "input": {
            "language": language_lines(cert.lang),
            "context": [print_type(ty) for ty in p.context],
            "tags": p.tag_string,
            "const_tags": {name: side.value for name, side in p.const_tags.items()},
            "default_const_side": p.default_const_side.value,
            "term": print_term(cert.term),
            "type": print_type(cert.type),
        },
        "normal_form": print_term(cert.normal_form),
        "M": print_type(cert.M),
        "l": print_term(cert.l),
        "r": print_term(cert.r),
        "composite": print_term(cert.composite),
        "trace": trace_content(cert.trace),
        "source_trace": trace_content(cert.source_trace),
    }


def certificate_digest(cert: Certificate) -> str:
    return content_digest(certificate_content(cert))


# =============================================================================
# Verification
# =============================================================================

def _typing(name: str, lang: Language, ctx: Context, t: Term, ty: Type) -> ClauseResult:
    try:
        actual = infer(lang, ctx, t)
    except TypeCheckError as exc:
        return ClauseResult(name, False, str(exc))
    if actual != ty:
        return ClauseResult(name, False, f"has type {print_type(actual)}, expected {print_type(ty)}")
    return ClauseResult(name, True)


def _vocabulary(cert: Certificate, polarity: Polarity) -> ClauseResult:
    name = "vocabulary_positive" if polarity is Polarity.POS else "vocabulary_negative"
    source, target = vocab_bounds(cert)
    allowed = source.get(polarity) & (target.get(polarity.flip()) | vocab(cert.type).get(polarity))
    extra = vocab(cert.M).get(polarity) - allowed
    if extra:
        return ClauseResult(name, False, f"outside the shared vocabulary: {', '.join(sorted(extra))}")
    return ClauseResult(name, True)


def _constants(cert: Certificate) -> ClauseResult:
    source = set(cert.side_constants(Side.SOURCE))
    target = set(cert.side_constants(Side.TARGET))
    problems = []
    if stray := constants_of(cert.l) - source:
        problems.append(f"l mentions {', '.join(sorted(stray))}")
    if stray := constants_of(cert.r) - target:
        problems.append(f"r mentions {', '.join(sorted(stray))}")
    return ClauseResult("constants", not problems, "; ".join(problems))


def _reduction(cert: Certificate, fuel: int) -> ClauseResult:
    composite = compose(cert.partition, cert.l, cert.r)
    if composite != cert.composite:
        return ClauseResult("reduction", False, "recorded composite differs from compose(l, r)")
    try:
        result = normalize(cert.lang, cert.context, composite, fuel)
    except StlcError as exc:
        return ClauseResult("reduction", False, str(exc))
    if result != cert.normal_form:
        return ClauseResult("reduction", False, f"composite normalizes to {print_term(result)}")
    return ClauseResult("reduction", True)


def _replay(name: str, start: Term, trace: tuple[TraceStep, ...], end: Term) -> ClauseResult:
    try:
        final = replay(start, trace)
    except StlcError as exc:
        return ClauseResult(name, False, str(exc))
    if final != end:
        return ClauseResult(name, False, f"trace ends at {print_term(final)}")
    return ClauseResult(name, True)


def verify_certificate(
    cert: Certificate, expected_digest: str | None = None, fuel: int = DEFAULT_FUEL
) -> Report:
    """
    Re-check a certificate clause by clause.

    Clauses: typing of the input term, typing of l and r in their
    sub-contexts and sub-languages, both vocabulary inclusions, constant
    sides, the reduction of the composite to the normal form, both
    recorded traces, and the digest when one is expected.
    """
    p = cert.partition
    clauses = [
        _typing("typing_input", cert.lang, cert.context, cert.term, cert.type),
        _typing("typing_left", cert.source_language, p.source_context, cert.l, cert.M),
        _typing("typing_right", cert.target_language, p.target_context + (cert.M,), cert.r, cert.type),
        _vocabulary(cert, Polarity.POS),
        _vocabulary(cert, Polarity.NEG),
        _constants(cert),
        _reduction(cert, fuel),
        _replay("trace", cert.composite, cert.trace, cert.normal_form),
        _replay("source_trace", cert.term, cert.source_trace, cert.normal_form),
    ]
    if not check_nf(cert.lang, cert.context, cert.normal_form, cert.type):
        clauses[-1] = ClauseResult("source_trace", False, "recorded normal form is not normal")
    if expected_digest is not None:
        actual = certificate_digest(cert)
        matches = digests_match(actual, expected_digest)
        clauses.append(ClauseResult("digest", matches, "" if matches else f"content digest is {actual}"))

    report = Report(tuple(clauses))
    _events.certificate_verified(report.passed, report.failed)
    return report
