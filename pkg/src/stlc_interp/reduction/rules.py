"""
rules.py - One-step reduction: β rules and commuting conversions.

Root rules:
    π_i ⟨a1, a2⟩             ⇝ a_i
    (λA. b) u               ⇝ b[0 := u]
    case T (inl a) bl br    ⇝ bl[0 := a]          (and inr / br)
    e[raise X n]            ⇝ raise (retype e X) n
    e[case T s bl br]       ⇝ case (retype e T) s e↑[bl] e↑[br]

e ranges over eliminations (see syntax.elim). The congruence closure
visits the root first, then children left to right; the first redex in
that order is the one the deterministic strategy contracts.
"""

from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum

from stlc_interp.subst import apply_subst, one, up, wk
from stlc_interp.syntax.elim import (
    EApp,
    ECase,
    EProj,
    ERaise,
    Elimination,
    unzip_elim,
    zip_elim,
)
from stlc_interp.syntax.terms import (
    App,
    Case,
    Inl,
    Inr,
    Lam,
    Pair,
    Path,
    Proj,
    Raise,
    Term,
    children,
    replace_at,
    replace_child,
    subterm_at,
)
from stlc_interp.syntax.types import Arrow, Prod, Type


class Rule(Enum):
    PAIR_BETA_1 = "PairBeta1"
    PAIR_BETA_2 = "PairBeta2"
    FUN_BETA = "FunBeta"
    INL_BETA = "InlBeta"
    INR_BETA = "InrBeta"
    COMM_RAISE = "CommRaise"
    COMM_CASE = "CommCase"


@dataclass(frozen=True, slots=True)
class Redex:
    """A rule applied at a path of child indices."""
    rule: Rule
    path: Path


def retype(e: Elimination, ty: Type) -> Type | None:
    """Type of zip_elim(e, t) given t : ty; None when the shapes disagree."""
    match e:
        case EApp():
            return ty.codomain if isinstance(ty, Arrow) else None
        case EProj(i):
            if not isinstance(ty, Prod):
                return None
            return ty.left if i == 1 else ty.right
        case ECase(motive, _, _) | ERaise(motive):
            return motive
    return None


def shift_elim(e: Elimination) -> Elimination:
    """Move e under one binder (the branch variable of a Case)."""
    match e:
        case EApp(u):
            return EApp(apply_subst(wk(), u))
        case ECase(motive, left, right):
            lifted = up(wk())
            return ECase(motive, apply_subst(lifted, left), apply_subst(lifted, right))
    return e


def root_reducts(t: Term) -> Iterator[tuple[Rule, Term]]:
    """Contractions of redexes sitting exactly at the root of t."""
    match t:
        case Proj(1, Pair(a, _)):
            yield Rule.PAIR_BETA_1, a
        case Proj(2, Pair(_, b)):
            yield Rule.PAIR_BETA_2, b
        case App(Lam(_, body), u):
            yield Rule.FUN_BETA, apply_subst(one(u), body)
        case Case(_, Inl(_, a), left, _):
            yield Rule.INL_BETA, apply_subst(one(a), left)
        case Case(_, Inr(_, a), _, right):
            yield Rule.INR_BETA, apply_subst(one(a), right)

    split = unzip_elim(t)
    if split is None:
        return
    e, head = split
    match head:
        case Raise(result, n):
            ty = retype(e, result)
            if ty is not None:
                yield Rule.COMM_RAISE, Raise(ty, n)
        case Case(motive, s, left, right):
            ty = retype(e, motive)
            if ty is not None:
                shifted = shift_elim(e)
                yield Rule.COMM_CASE, Case(
                    ty, s, zip_elim(shifted, left), zip_elim(shifted, right)
                )


def iter_reducts(t: Term, path: Path = ()) -> Iterator[tuple[Redex, Term]]:
    """
    Every one-step reduct of t, root first then children left to right.

    Yields (redex, whole reduced term).
    """
    for rule, result in root_reducts(t):
        yield Redex(rule, path), result
    for child, sub in enumerate(children(t)):
        for redex, reduced in iter_reducts(sub, path + (child,)):
            yield redex, replace_child(t, child, reduced)


def reducts(t: Term) -> list[tuple[Rule, Term]]:
    """All terms reachable from t in exactly one step, with the rule used."""
    return [(redex.rule, result) for redex, result in iter_reducts(t)]


def redexes(t: Term) -> list[Redex]:
    return [redex for redex, _ in iter_reducts(t)]


def contract(t: Term, redex: Redex) -> Term | None:
    """Contract the given redex; None if it does not occur in t."""
    sub = subterm_at(t, redex.path)
    if sub is None:
        return None
    for rule, result in root_reducts(sub):
        if rule is redex.rule:
            return replace_at(t, redex.path, result)
    return None
