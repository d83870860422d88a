"""
main.py - The stlc-interp command line.

Every command reads its inputs as s-expressions. Without --lang the
language is the constant-free one over the base names the inputs
mention. Exit codes: 0 success, 1 a check or verification failed,
2 the input could not be read, parsed or typed.
"""

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from stlc_interp import __version__
from stlc_interp.bidir import check_nf, infer_ne
from stlc_interp.config import (
    DEFAULT_FUEL,
    EXIT_FAILED,
    EXIT_INPUT_ERROR,
    FUEL_ENV_VAR,
    LOG_LEVEL_ENV_VAR,
)
from stlc_interp.enumeration import count_terms, default_cut_types
from stlc_interp.errors import (
    FuelExhaustedError,
    InvariantViolationError,
    NotNeutralError,
    PartitionError,
    StlcError,
)
from stlc_interp.interpolation.certificate import certify, check_constant_tags, verify_certificate
from stlc_interp.interpolation.partition import Side, make_partition
from stlc_interp.metrics import configure_logging
from stlc_interp.reduction.normalize import normalize_traced
from stlc_interp.surface.document import (
    dump_document,
    from_document,
    read_document,
    to_document,
    write_document,
)
from stlc_interp.surface.sexpr import (
    parse_context,
    parse_language,
    parse_term,
    parse_type,
    print_term,
    print_type,
)
from stlc_interp.syntax.context import Context
from stlc_interp.syntax.terms import Term, annotations
from stlc_interp.syntax.types import Language, Type, base_names
from stlc_interp.typecheck import check, infer

app = typer.Typer(help="STLC interpolation toolkit", no_args_is_help=True)
console = Console()
err_console = Console(stderr=True)
logger = logging.getLogger(__name__)


@app.callback()
def _setup(
    log_level: str = typer.Option(
        "WARNING", "--log-level", envvar=LOG_LEVEL_ENV_VAR, help="Log level"
    ),
    log_json: bool = typer.Option(False, "--log-json", help="Structured JSON logs"),
) -> None:
    """Simply-typed lambda-calculus with sums: normalization and interpolation."""
    configure_logging(level=log_level, json_format=log_json)


@contextmanager
def _diagnostics() -> Iterator[None]:
    """Turn library errors into exit codes with a message on stderr."""
    try:
        yield
    except (FuelExhaustedError, InvariantViolationError) as exc:
        err_console.print(f"[red]Error:[/red] {escape(str(exc))}")
        raise typer.Exit(code=EXIT_FAILED) from exc
    except StlcError as exc:
        err_console.print(f"[red]Input error:[/red] {escape(str(exc))}")
        raise typer.Exit(code=EXIT_INPUT_ERROR) from exc
    except OSError as exc:
        err_console.print(f"[red]Cannot read input:[/red] {escape(str(exc))}")
        raise typer.Exit(code=EXIT_INPUT_ERROR) from exc


def _language(lang_file: Optional[Path], types: list[Type], terms: list[Term]) -> Language:
    if lang_file is not None:
        return parse_language(lang_file.read_text(encoding="utf-8"))
    names: set[str] = set()
    for ty in types:
        names |= base_names(ty)
    for t in terms:
        for ty in annotations(t):
            names |= base_names(ty)
    return Language.from_bases(names)


def _read_term(
    lang_file: Optional[Path], ctx: str, term: str, type_: Optional[str] = None
) -> tuple[Language, Context, Term, Type | None]:
    context = parse_context(ctx)
    t = parse_term(term)
    ty = parse_type(type_) if type_ is not None else None
    lang = _language(lang_file, [*context, *([ty] if ty is not None else [])], [t])
    return lang, context, t, ty


def _const_tags(text: str) -> dict[str, Side]:
    """Parse "c=s,d=t"."""
    tags: dict[str, Side] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        name, sep, side = item.partition("=")
        if not sep or not name.strip():
            raise PartitionError("Constant tags look like 'c=s,d=t'", actual=item)
        try:
            tags[name.strip()] = Side(side.strip())
        except ValueError:
            raise PartitionError("Constant side must be 's' or 't'", actual=item) from None
    return tags


def _lang_option() -> Optional[Path]:
    return typer.Option(None, "--lang", help="Language file (base/const lines)")


def _ctx_option() -> str:
    return typer.Option("", "--ctx", help="Context: space-separated types, oldest first")


def _fuel_option() -> int:
    return typer.Option(DEFAULT_FUEL, "--fuel", envvar=FUEL_ENV_VAR, help="Normalization step budget")


@app.command()
def version() -> None:
    """Print the package version."""
    typer.echo(__version__)


@app.command("check")
def check_cmd(
    term: str = typer.Option(..., "--term", help="Term"),
    type_: str = typer.Option(..., "--type", help="Expected type"),
    ctx: str = _ctx_option(),
    lang_file: Optional[Path] = _lang_option(),
) -> None:
    """Check that a term has a type."""
    with _diagnostics():
        lang, context, t, ty = _read_term(lang_file, ctx, term, type_)
        assert ty is not None
        ok = check(lang, context, t, ty)
    if not ok:
        console.print("[red]FAIL[/red]")
        raise typer.Exit(code=EXIT_FAILED)
    console.print("[green]OK[/green]")


@app.command("infer")
def infer_cmd(
    term: str = typer.Option(..., "--term", help="Term"),
    ctx: str = _ctx_option(),
    lang_file: Optional[Path] = _lang_option(),
) -> None:
    """Infer the type of a term."""
    with _diagnostics():
        lang, context, t, _ = _read_term(lang_file, ctx, term)
        typer.echo(print_type(infer(lang, context, t)))


@app.command("normalize")
def normalize_cmd(
    term: str = typer.Option(..., "--term", help="Term"),
    ctx: str = _ctx_option(),
    lang_file: Optional[Path] = _lang_option(),
    fuel: int = _fuel_option(),
    trace: bool = typer.Option(False, "--trace", help="Print every contraction"),
) -> None:
    """Normalize a term and print its normal form."""
    with _diagnostics():
        lang, context, t, _ = _read_term(lang_file, ctx, term)
        result = normalize_traced(lang, context, t, fuel)
    if trace:
        for number, s in enumerate(result.trace, 1):
            path = ".".join(str(i) for i in s.redex.path) or "root"
            typer.echo(f"{number}. {s.redex.rule.value} @ {path}: {print_term(s.result)}")
    typer.echo(print_term(result.term))


@app.command("nf-check")
def nf_check_cmd(
    term: str = typer.Option(..., "--term", help="Term"),
    type_: str = typer.Option(..., "--type", help="Type to check against"),
    ctx: str = _ctx_option(),
    lang_file: Optional[Path] = _lang_option(),
) -> None:
    """Check that a term is a normal form of a type."""
    with _diagnostics():
        lang, context, t, ty = _read_term(lang_file, ctx, term, type_)
        assert ty is not None
        ok = check_nf(lang, context, t, ty)
    if not ok:
        console.print("[red]NOT NORMAL[/red]")
        raise typer.Exit(code=EXIT_FAILED)
    console.print("[green]NORMAL[/green]")


@app.command("neutral-infer")
def neutral_infer_cmd(
    term: str = typer.Option(..., "--term", help="Term"),
    ctx: str = _ctx_option(),
    lang_file: Optional[Path] = _lang_option(),
) -> None:
    """Infer the type of a neutral term."""
    with _diagnostics():
        lang, context, t, _ = _read_term(lang_file, ctx, term)
        try:
            ty = infer_ne(lang, context, t)
        except NotNeutralError as exc:
            err_console.print(f"[red]Not neutral:[/red] {escape(str(exc))}")
            raise typer.Exit(code=EXIT_FAILED) from exc
    typer.echo(print_type(ty))


@app.command("interpolate")
def interpolate_cmd(
    term: str = typer.Option(..., "--term", help="Term"),
    type_: str = typer.Option(..., "--type", help="Type of the term"),
    ctx: str = _ctx_option(),
    lang_file: Optional[Path] = _lang_option(),
    tags: Optional[str] = typer.Option(
        None, "--tags", help="Side of each context entry, e.g. 'sst' (default: all source)"
    ),
    const_tags: str = typer.Option(
        "", "--const-tags", help="Side of every language constant, e.g. 'c=s,d=t'"
    ),
    fuel: int = _fuel_option(),
    as_json: bool = typer.Option(False, "--json", help="Print the certificate document"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the certificate here"),
) -> None:
    """Interpolate a term across a context partition and verify the result."""
    with _diagnostics():
        lang, context, t, ty = _read_term(lang_file, ctx, term, type_)
        assert ty is not None
        sides = _const_tags(const_tags)
        check_constant_tags(lang, sides)
        partition = make_partition(context, tags if tags is not None else "s" * len(context), sides)
        cert = certify(lang, partition, t, ty, fuel)
        report = verify_certificate(cert, fuel=fuel)
        doc = to_document(cert, report)
        if output is not None:
            write_document(output, doc)
            logger.info("Certificate written to %s", output)

    if as_json:
        typer.echo(dump_document(doc))
    else:
        typer.echo(f"M = {doc.M}")
        typer.echo(f"l = {doc.l}")
        typer.echo(f"r = {doc.r}")
        if report.passed:
            console.print("[green]PASS[/green]")
        else:
            console.print(f"[red]FAIL[/red] {', '.join(report.failed)}")
    if not report.passed:
        raise typer.Exit(code=EXIT_FAILED)


@app.command("verify")
def verify_cmd(
    path: Path = typer.Argument(..., help="Certificate document (JSON)"),
    fuel: int = _fuel_option(),
) -> None:
    """Re-check a certificate document clause by clause."""
    with _diagnostics():
        doc = read_document(path)
        report = verify_certificate(from_document(doc), expected_digest=doc.digest, fuel=fuel)

    table = Table(title=f"Certificate {path.name}")
    table.add_column("Clause", style="cyan")
    table.add_column("Result")
    table.add_column("Detail", style="dim")
    for clause in report.clauses:
        result = "[green]pass[/green]" if clause.passed else "[red]fail[/red]"
        table.add_row(clause.name, result, escape(clause.detail))
    console.print(table)

    if not report.passed:
        console.print("[red]FAIL[/red]")
        raise typer.Exit(code=EXIT_FAILED)
    console.print("[green]PASS[/green]")


@app.command("enumerate")
def enumerate_cmd(
    type_: str = typer.Option(..., "--type", help="Type to enumerate"),
    ctx: str = _ctx_option(),
    lang_file: Optional[Path] = _lang_option(),
    size: int = typer.Option(4, "--size", min=1, help="Largest term size"),
    depth: int = typer.Option(
        0, "--depth", min=0, help="Type depth for App domains, Proj siblings and Case summands"
    ),
) -> None:
    """Count terms and normal forms of each size."""
    with _diagnostics():
        context = parse_context(ctx)
        ty = parse_type(type_)
        lang = _language(lang_file, [*context, ty], [])
        counts = count_terms(lang, context, ty, size, default_cut_types(lang, context, ty, depth))

    table = Table(title=f"Terms of {print_type(ty)}")
    table.add_column("Size", justify="right", style="cyan")
    table.add_column("Terms", justify="right")
    table.add_column("Normal forms", justify="right", style="green")
    for row in counts:
        table.add_row(str(row.size), str(row.terms), str(row.normal_forms))
    console.print(table)


def main() -> None:
    app()


if __name__ == "__main__":
    main()
