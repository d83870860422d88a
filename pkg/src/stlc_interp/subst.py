"""
subst.py - Parallel substitutions on de Bruijn terms.

A substitution σ : Δ ⇒ Γ sends every index of Γ to a term over Δ. It is
stored as an explicit prefix σ(0) .. σ(k-1) followed by a shift tail:
σ(i) = Var(i - k + shift) for i >= k. The tail is what keeps every
substitution finite.

    identity  = (∅, 0)          wk  = (∅, 1)
    cons(σ,t) = (t·prefix, shift)
    up(σ)     = (Var 0 · wk[prefix], shift + 1)
"""

from collections.abc import Callable
from dataclasses import dataclass

from stlc_interp.errors import SubstitutionError, TypeCheckError
from stlc_interp.syntax.context import Context, lookup
from stlc_interp.syntax.terms import (
    App,
    Case,
    Cst,
    Inl,
    Inr,
    Lam,
    Pair,
    Proj,
    Raise,
    Star,
    Term,
    Var,
)
from stlc_interp.syntax.types import Language
from stlc_interp.typecheck import infer


@dataclass(frozen=True, slots=True)
class Substitution:
    prefix: tuple[Term, ...] = ()
    shift: int = 0

    def __post_init__(self) -> None:
        if self.shift < 0:
            raise SubstitutionError(f"Substitution shift must be non-negative, got {self.shift}")

    def at(self, index: int) -> Term:
        """The term bound to de Bruijn index `index`."""
        k = len(self.prefix)
        if index < k:
            return self.prefix[index]
        return Var(index - k + self.shift)

    def __len__(self) -> int:
        return len(self.prefix)


def identity() -> Substitution:
    return Substitution((), 0)


def wk() -> Substitution:
    """Weakening: every index moves up by one."""
    return Substitution((), 1)


def cons(s: Substitution, t: Term) -> Substitution:
    """Bind index 0 to t, then continue with s."""
    return Substitution((t,) + s.prefix, s.shift)


def one(t: Term) -> Substitution:
    """The single substitution [0 := t]."""
    return cons(identity(), t)


def up(s: Substitution) -> Substitution:
    """Lift s under one binder."""
    weaken = wk()
    return Substitution(
        (Var(0),) + tuple(apply_subst(weaken, u) for u in s.prefix),
        s.shift + 1,
    )


def comp(s: Substitution, t: Substitution) -> Substitution:
    """
    Composition: apply_subst(comp(s, t), u) == apply_subst(t, apply_subst(s, u)).

    The prefix is extended far enough that the remaining tail of the
    composite is a pure shift.
    """
    k = len(s.prefix)
    reach = max(k, k + len(t.prefix) - s.shift)
    prefix = tuple(
        apply_subst(t, s.prefix[i]) if i < k else t.at(i - k + s.shift)
        for i in range(reach)
    )
    shift = reach - k + s.shift - len(t.prefix) + t.shift
    return Substitution(prefix, shift)


def tip(f: Callable[[Term], Term]) -> Substitution:
    """Rewrite index 0 to f(Var 0), leaving everything else alone."""
    return Substitution((f(Var(0)),), 1)


def is_renaming(s: Substitution) -> bool:
    """True iff every prefix entry is a variable."""
    return all(isinstance(u, Var) for u in s.prefix)


def apply_subst(s: Substitution, t: Term) -> Term:
    """Capture-avoiding application of s to t."""
    match t:
        case Var(i):
            return s.at(i)
        case Cst() | Star():
            return t
        case Pair(a, b):
            return Pair(apply_subst(s, a), apply_subst(s, b))
        case Proj(i, a):
            return Proj(i, apply_subst(s, a))
        case Lam(ty, body):
            return Lam(ty, apply_subst(up(s), body))
        case App(f, a):
            return App(apply_subst(s, f), apply_subst(s, a))
        case Raise(ty, a):
            return Raise(ty, apply_subst(s, a))
        case Inl(ty, a):
            return Inl(ty, apply_subst(s, a))
        case Inr(ty, a):
            return Inr(ty, apply_subst(s, a))
        case Case(ty, scrutinee, left, right):
            lifted = up(s)
            return Case(
                ty,
                apply_subst(s, scrutinee),
                apply_subst(lifted, left),
                apply_subst(lifted, right),
            )
    raise SubstitutionError(f"Not a term: {t!r}")


# Alias used where the operation reads as a method on substitutions
apply = apply_subst


def weaken(t: Term) -> Term:
    return apply_subst(wk(), t)


def instantiate(body: Term, value: Term) -> Term:
    """body[0 := value], with the binder removed."""
    return apply_subst(one(value), body)


def check_sub_typing(lang: Language, target: Context, s: Substitution, source: Context) -> bool:
    """
    True iff s : target ⇒ source, i.e. each s(i) has type source(i) over target.

    Only indices bound in `source` are checked.
    """
    for i in range(len(source)):
        try:
            if infer(lang, target, s.at(i)) != lookup(source, i):
                return False
        except TypeCheckError:
            return False
    return True
