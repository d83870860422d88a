"""
engine.py - Interpolants by recursion on normal and neutral forms.

For a partition Γ = Γ_s | Γ_t and a normal form Γ ⊢ t : T the engine
returns (M, l, r) with

    Γ_s ⊢ l : M        Γ_t, z:M ⊢ r : T        compose(p, l, r) ⇝* t

and M built from the vocabulary shared by the two sides. A neutral form
yields the same triple oriented by the side owning its head variable or
constant: a target-side neutral is interpolated from Γ_s to Γ_t, a
source-side neutral from Γ_t to Γ_s (the reversed partition).

Application chains accumulate the interpolant as a left-nested product,
so `x a b` gives one arrow ((⊤ × M_a) × M_b) → C, never a curried one.
"""

import logging
from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass, field

from stlc_interp.bidir import check_nf, infer_ne
from stlc_interp.errors import NotNeutralError, NotNormalError
from stlc_interp.interpolation.partition import Partition, Side, extend, reverse
from stlc_interp.subst import Substitution, apply_subst, cons, tip, up, wk
from stlc_interp.syntax.context import position_of
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
    STAR,
    Star,
    Term,
    Var,
)
from stlc_interp.syntax.types import EMPTY, UNIT, Arrow, Language, Prod, Sum, Type

logger = logging.getLogger(__name__)

# Swap the two most recent bindings.
SWAP = Substitution((Var(1), Var(0)), 2)


@dataclass(frozen=True, slots=True)
class NfInterpolant:
    """Γ_s ⊢ l : M and Γ_t, z:M ⊢ r : T."""
    M: Type
    l: Term
    r: Term


@dataclass(frozen=True, slots=True)
class NeInterpolant:
    """
    Interpolant of a neutral of type `type`.

    side SOURCE: Γ_t ⊢ l : M and Γ_s, z:M ⊢ r : type.
    side TARGET: Γ_s ⊢ l : M and Γ_t, z:M ⊢ r : type.
    """
    side: Side
    M: Type
    l: Term
    r: Term
    type: Type


def _weaken_under_one(t: Term) -> Term:
    return apply_subst(up(wk()), t)


def _proj(*indices: int) -> Callable[[Term], Term]:
    """Builder for the projection path π_{i1} (π_{i2} (.. t)) ."""

    def build(t: Term) -> Term:
        for i in reversed(indices):
            t = Proj(i, t)
        return t

    return build


@dataclass
class Interpolator:
    """
    Runs the mutual recursion and counts neutral heads per side.

    Sides in `heads` refer to the partition the run started from, even
    inside arguments interpolated over the reversed partition.
    """

    lang: Language
    heads: Counter[str] = field(default_factory=Counter)
    _reversed: bool = field(default=False, repr=False)

    def _count(self, side: Side) -> None:
        self.heads[(side.flip() if self._reversed else side).label] += 1

    # -- normal forms -------------------------------------------------

    def nf(self, p: Partition, t: Term, ty: Type) -> NfInterpolant:
        match t:
            case Star():
                return NfInterpolant(UNIT, STAR, STAR)

            case Pair(a, b):
                assert isinstance(ty, Prod)
                first = self.nf(p, a, ty.left)
                second = self.nf(p, b, ty.right)
                return NfInterpolant(
                    Prod(first.M, second.M),
                    Pair(first.l, second.l),
                    Pair(
                        apply_subst(tip(_proj(1)), first.r),
                        apply_subst(tip(_proj(2)), second.r),
                    ),
                )

            case Lam(domain, body):
                assert isinstance(ty, Arrow)
                inner = self.nf(extend(p, Side.TARGET, domain), body, ty.codomain)
                return NfInterpolant(inner.M, inner.l, Lam(domain, apply_subst(SWAP, inner.r)))

            case Inl(sum_ty, a):
                assert isinstance(ty, Sum)
                inner = self.nf(p, a, ty.left)
                return NfInterpolant(inner.M, inner.l, Inl(sum_ty, inner.r))

            case Inr(sum_ty, a):
                assert isinstance(ty, Sum)
                inner = self.nf(p, a, ty.right)
                return NfInterpolant(inner.M, inner.l, Inr(sum_ty, inner.r))

            case Raise(_, n):
                head = self.ne(p, n)
                if head.side is Side.TARGET:
                    return NfInterpolant(head.M, head.l, Raise(ty, head.r))
                return NfInterpolant(
                    Arrow(head.M, EMPTY),
                    Lam(head.M, head.r),
                    Raise(ty, App(Var(0), apply_subst(wk(), head.l))),
                )

            case Case(_, s, left, right):
                return self._case(p, s, left, right, ty)

        return self._demote(p, t, ty)

    def _demote(self, p: Partition, t: Term, ty: Type) -> NfInterpolant:
        head = self.ne(p, t)
        if head.side is Side.TARGET:
            return NfInterpolant(head.M, head.l, head.r)
        return NfInterpolant(
            Arrow(head.M, ty),
            Lam(head.M, head.r),
            App(Var(0), apply_subst(wk(), head.l)),
        )

    def _case(self, p: Partition, s: Term, left: Term, right: Term, ty: Type) -> NfInterpolant:
        scrutinee = self.ne(p, s)
        sum_ty = scrutinee.type
        assert isinstance(sum_ty, Sum)
        side = scrutinee.side
        on_left = self.nf(extend(p, side, sum_ty.left), left, ty)
        on_right = self.nf(extend(p, side, sum_ty.right), right, ty)

        if side is Side.SOURCE:
            branches = Sum(on_left.M, on_right.M)
            l = Lam(
                scrutinee.M,
                Case(
                    branches,
                    scrutinee.r,
                    Inl(branches, _weaken_under_one(on_left.l)),
                    Inr(branches, _weaken_under_one(on_right.l)),
                ),
            )
            r = Case(
                ty,
                App(Var(0), apply_subst(wk(), scrutinee.l)),
                _weaken_under_one(on_left.r),
                _weaken_under_one(on_right.r),
            )
            return NfInterpolant(Arrow(scrutinee.M, branches), l, r)

        # Target-side scrutinee: pair up the three left interpolants.
        r = Case(
            ty,
            apply_subst(tip(_proj(1, 1)), scrutinee.r),
            apply_subst(Substitution((Proj(2, Proj(1, Var(1))), Var(0)), 2), on_left.r),
            apply_subst(Substitution((Proj(2, Var(1)), Var(0)), 2), on_right.r),
        )
        return NfInterpolant(
            Prod(Prod(scrutinee.M, on_left.M), on_right.M),
            Pair(Pair(scrutinee.l, on_left.l), on_right.l),
            r,
        )

    # -- neutral forms ------------------------------------------------

    def ne(self, p: Partition, t: Term) -> NeInterpolant:
        match t:
            case Var(i):
                side, sub_index = p.locate(i)
                self._count(side)
                ty = p.context[position_of(p.context, i)]
                return NeInterpolant(side, UNIT, STAR, Var(sub_index + 1), ty)

            case Cst(name):
                ty = self.lang.type_of(name)
                if ty is None:
                    raise NotNeutralError(f"Unknown constant {name}", t)
                side = p.constant_side(name)
                self._count(side)
                return NeInterpolant(side, UNIT, STAR, t, ty)

            case Proj(i, n):
                head = self.ne(p, n)
                assert isinstance(head.type, Prod)
                component = head.type.left if i == 1 else head.type.right
                return NeInterpolant(head.side, head.M, head.l, Proj(i, head.r), component)

            case App(n, u):
                head = self.ne(p, n)
                assert isinstance(head.type, Arrow)
                # The argument is interpolated in the direction of the head.
                if head.side is Side.SOURCE:
                    self._reversed = not self._reversed
                    try:
                        arg = self.nf(reverse(p), u, head.type.domain)
                    finally:
                        self._reversed = not self._reversed
                else:
                    arg = self.nf(p, u, head.type.domain)
                return NeInterpolant(
                    head.side,
                    Prod(head.M, arg.M),
                    Pair(head.l, arg.l),
                    App(
                        apply_subst(tip(_proj(1)), head.r),
                        apply_subst(tip(_proj(2)), arg.r),
                    ),
                    head.type.codomain,
                )

        raise NotNeutralError("Not a neutral form", t)


def interpolate_nf(lang: Language, p: Partition, t: Term, ty: Type) -> NfInterpolant:
    """
    Interpolate a normal form across the partition p.

    Raises:
        NotNormalError: t is not a normal form of ty over p.context
    """
    if not check_nf(lang, p.context, t, ty):
        raise NotNormalError("Term is not a normal form of the given type", t, ty)
    interpolator = Interpolator(lang)
    result = interpolator.nf(p, t, ty)
    logger.debug("interpolated over %s, heads %s", p.tag_string, dict(interpolator.heads))
    return result


def interpolate_ne(lang: Language, p: Partition, t: Term) -> NeInterpolant:
    """
    Interpolate a neutral form; the side is the side of its head.

    Raises:
        NotNeutralError: t is not a neutral form over p.context
    """
    infer_ne(lang, p.context, t)
    return Interpolator(lang).ne(p, t)


def compose(p: Partition, l: Term, r: Term) -> Term:
    """
    Plug l into r, landing in the full context:
    r[z := ρ_s(l), Γ_t := ρ_t].
    """
    return apply_subst(cons(p.target_renaming, apply_subst(p.source_renaming, l)), r)


def compose_ne(p: Partition, interpolant: NeInterpolant) -> Term:
    """Compose a neutral interpolant in the direction given by its side."""
    oriented = reverse(p) if interpolant.side is Side.SOURCE else p
    return compose(oriented, interpolant.l, interpolant.r)
