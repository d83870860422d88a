"""
bidir.py - Bidirectional classification of normal and neutral forms.

    neutral  n ::= x | c | π_i n | n v                       (infer_ne)
    normal   v ::= ⋆ | ⟨v, v⟩ | λ.v | inl v | inr v | n
                 | raise n | case n v v                        (check_nf)

Case and Raise only ever check; constructors never infer. Annotations
must agree with the type being checked, which on well-typed input they
always do.
"""

from stlc_interp.errors import NotNeutralError
from stlc_interp.syntax.context import Context, extend, lookup
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
from stlc_interp.syntax.types import EMPTY, Arrow, Language, Prod, Sum, Type, Unit


def infer_ne(lang: Language, ctx: Context, t: Term) -> Type:
    """
    Infer the type of a neutral form.

    Raises:
        NotNeutralError: t is not a neutral form in ctx
    """
    match t:
        case Var(i):
            ty = lookup(ctx, i)
            if ty is None:
                raise NotNeutralError(f"Unbound variable {i}", t)
            return ty
        case Cst(name):
            ty = lang.type_of(name)
            if ty is None:
                raise NotNeutralError(f"Unknown constant {name}", t)
            return ty
        case Proj(i, head):
            head_ty = infer_ne(lang, ctx, head)
            if not isinstance(head_ty, Prod):
                raise NotNeutralError("Projection head is not a product", t)
            return head_ty.left if i == 1 else head_ty.right
        case App(head, arg):
            head_ty = infer_ne(lang, ctx, head)
            if not isinstance(head_ty, Arrow):
                raise NotNeutralError("Application head is not a function", t)
            if not check_nf(lang, ctx, arg, head_ty.domain):
                raise NotNeutralError("Application argument is not a normal form", t)
            return head_ty.codomain
    raise NotNeutralError("Not a neutral form", t)


def _demote(lang: Language, ctx: Context, t: Term, ty: Type) -> bool:
    try:
        return infer_ne(lang, ctx, t) == ty
    except NotNeutralError:
        return False


def check_nf(lang: Language, ctx: Context, t: Term, ty: Type) -> bool:
    """True iff t is a normal form of type ty in ctx."""
    match t:
        case Star():
            return isinstance(ty, Unit)
        case Pair(a, b):
            return (
                isinstance(ty, Prod)
                and check_nf(lang, ctx, a, ty.left)
                and check_nf(lang, ctx, b, ty.right)
            )
        case Lam(domain, body):
            return (
                isinstance(ty, Arrow)
                and domain == ty.domain
                and check_nf(lang, extend(ctx, domain), body, ty.codomain)
            )
        case Inl(sum_ty, a):
            return isinstance(ty, Sum) and sum_ty == ty and check_nf(lang, ctx, a, ty.left)
        case Inr(sum_ty, a):
            return isinstance(ty, Sum) and sum_ty == ty and check_nf(lang, ctx, a, ty.right)
        case Raise(result, n):
            return result == ty and _demote(lang, ctx, n, EMPTY)
        case Case(motive, s, left, right):
            if motive != ty:
                return False
            try:
                s_ty = infer_ne(lang, ctx, s)
            except NotNeutralError:
                return False
            return (
                isinstance(s_ty, Sum)
                and check_nf(lang, extend(ctx, s_ty.left), left, ty)
                and check_nf(lang, extend(ctx, s_ty.right), right, ty)
            )
    return _demote(lang, ctx, t, ty)


def is_nf(lang: Language, ctx: Context, t: Term, ty: Type) -> bool:
    return check_nf(lang, ctx, t, ty)


def is_neutral(lang: Language, ctx: Context, t: Term) -> bool:
    try:
        infer_ne(lang, ctx, t)
    except NotNeutralError:
        return False
    return True
