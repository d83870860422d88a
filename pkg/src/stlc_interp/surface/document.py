"""
document.py - JSON certificate documents.

The document is the printed certificate content plus the vocabulary
report, the verdict of verification at write time and the content
digest. Reading a document re-parses every printed field; nothing is
trusted until verify_certificate has run.
"""

from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, ValidationError as PydanticValidationError

from stlc_interp.config import CERTIFICATE_FORMAT_VERSION
from stlc_interp.errors import CertificateError, StlcError
from stlc_interp.interpolation.certificate import (
    Certificate,
    Report,
    certificate_content,
    certificate_digest,
    vocab_report,
)
from stlc_interp.interpolation.partition import Side, make_partition
from stlc_interp.reduction.normalize import TraceStep
from stlc_interp.reduction.rules import Redex, Rule
from stlc_interp.surface.sexpr import parse_context, parse_language, parse_term, parse_type


class InputModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    language: list[str]
    context: list[str]
    tags: str
    const_tags: dict[str, str] = Field(default_factory=dict)
    default_const_side: str = Side.SOURCE.value
    term: str
    type: str


class TraceStepModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    rule: str
    path: list[int]
    term: str


class VocabModel(BaseModel):
    pos: list[str]
    neg: list[str]


class CertificateDocument(BaseModel):
    """On-disk form of a certificate."""

    model_config = ConfigDict(extra="forbid")

    format_version: int = CERTIFICATE_FORMAT_VERSION
    input: InputModel
    normal_form: str
    M: str
    l: str
    r: str
    composite: str
    vocab_report: dict[str, VocabModel]
    trace: list[TraceStepModel]
    source_trace: list[TraceStepModel]
    verdict: str
    digest: str


def to_document(cert: Certificate, report: Report) -> CertificateDocument:
    content = certificate_content(cert)
    return CertificateDocument(
        **content,
        vocab_report=vocab_report(cert),
        verdict="PASS" if report.passed else "FAIL",
        digest=certificate_digest(cert),
    )


def _trace(steps: list[TraceStepModel], where: str) -> tuple[TraceStep, ...]:
    result = []
    for number, step in enumerate(steps):
        try:
            rule = Rule(step.rule)
        except ValueError:
            raise CertificateError("Unknown reduction rule", f"{where}[{number}]", step.rule) from None
        result.append(TraceStep(Redex(rule, tuple(step.path)), parse_term(step.term)))
    return tuple(result)


def from_document(doc: CertificateDocument) -> Certificate:
    """
    Rebuild a certificate from its document.

    Raises:
        CertificateError: the document's fields do not parse
    """
    if doc.format_version != CERTIFICATE_FORMAT_VERSION:
        raise CertificateError(
            "Unsupported certificate format", "format_version", str(doc.format_version)
        )
    try:
        lang = parse_language("\n".join(doc.input.language))
        ctx = parse_context(" ".join(doc.input.context))
        const_tags = {name: Side(tag) for name, tag in doc.input.const_tags.items()}
        partition = make_partition(ctx, doc.input.tags, const_tags, Side(doc.input.default_const_side))
        return Certificate(
            lang=lang,
            partition=partition,
            term=parse_term(doc.input.term),
            type=parse_type(doc.input.type),
            normal_form=parse_term(doc.normal_form),
            source_trace=_trace(doc.source_trace, "source_trace"),
            M=parse_type(doc.M),
            l=parse_term(doc.l),
            r=parse_term(doc.r),
            composite=parse_term(doc.composite),
            trace=_trace(doc.trace, "trace"),
        )
    except CertificateError:
        raise
    except (StlcError, ValueError) as exc:
        raise CertificateError("Certificate field does not parse", reason=str(exc)) from exc


def dump_document(doc: CertificateDocument) -> str:
    return doc.model_dump_json(indent=2)


def load_document(text: str) -> CertificateDocument:
    """
    Raises:
        CertificateError: text is not a certificate document
    """
    try:
        return CertificateDocument.model_validate_json(text)
    except PydanticValidationError as exc:
        raise CertificateError("Malformed certificate document", reason=str(exc)) from exc


def write_document(path: Path, doc: CertificateDocument) -> None:
    path.write_text(dump_document(doc) + "\n", encoding="utf-8")


def read_document(path: Path) -> CertificateDocument:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CertificateError("Cannot read certificate", str(path), str(exc)) from exc
    return load_document(text)
