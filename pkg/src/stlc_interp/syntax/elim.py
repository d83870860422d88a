"""
elim.py - Eliminations and zipping.

An elimination is a term with a hole in principal position:
    e ::= · u | π_i | case T · l r | raise T ·
zip_elim(e, t) plugs t into the hole. Raise is included because it is
the elimination of ⊥: without it `raise (raise n)` would be a stuck
non-normal term.
"""

from dataclasses import dataclass

from stlc_interp.errors import ValidationError
from stlc_interp.syntax.terms import App, Case, Proj, Raise, Term
from stlc_interp.syntax.types import Type


@dataclass(frozen=True, slots=True)
class EApp:
    arg: Term


@dataclass(frozen=True, slots=True)
class EProj:
    index: int

    def __post_init__(self) -> None:
        if self.index not in (1, 2):
            raise ValidationError(
                f"projection index must be 1 or 2, got {self.index}",
                field="index",
                value=self.index,
            )


@dataclass(frozen=True, slots=True)
class ECase:
    """Branches bind one variable each, like Case branches."""
    motive: Type
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class ERaise:
    result: Type


Elimination = EApp | EProj | ECase | ERaise


def zip_elim(e: Elimination, t: Term) -> Term:
    """Plug t into the hole of e."""
    match e:
        case EApp(u):
            return App(t, u)
        case EProj(i):
            return Proj(i, t)
        case ECase(motive, left, right):
            return Case(motive, t, left, right)
        case ERaise(result):
            return Raise(result, t)
    raise ValidationError("Not an elimination", value=e)


def unzip_elim(t: Term) -> tuple[Elimination, Term] | None:
    """Inverse of zip_elim: split t into (elimination, principal subterm)."""
    match t:
        case App(f, u):
            return EApp(u), f
        case Proj(i, p):
            return EProj(i), p
        case Case(motive, s, left, right):
            return ECase(motive, left, right), s
        case Raise(result, n):
            return ERaise(result), n
    return None
