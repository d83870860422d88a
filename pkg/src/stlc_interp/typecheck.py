"""
typecheck.py - Syntax-directed type inference for full terms.

Annotations make inference a function: each term has at most one type
in a given context. Type equality is structural.
"""

from stlc_interp.errors import TypeCheckError
from stlc_interp.syntax.context import Context, extend, lookup
from stlc_interp.syntax.terms import (
    App,
    Case,
    Cst,
    Inl,
    Inr,
    Lam,
    Pair,
    Path,
    Proj,
    Raise,
    Star,
    Term,
    Var,
)
from stlc_interp.syntax.types import (
    EMPTY,
    UNIT,
    Arrow,
    Language,
    Prod,
    Sum,
    Type,
    vocab_closed,
)


def _annotation(lang: Language, ty: Type, path: Path, t: Term) -> None:
    if not vocab_closed(ty, lang):
        raise TypeCheckError("Annotation mentions undeclared base types", path, t)


def _infer(lang: Language, ctx: Context, t: Term, path: Path) -> Type:
    match t:
        case Var(i):
            ty = lookup(ctx, i)
            if ty is None:
                raise TypeCheckError(f"Unbound variable {i}", path, t)
            return ty

        case Cst(name):
            ty = lang.type_of(name)
            if ty is None:
                raise TypeCheckError(f"Unknown constant {name}", path, t)
            return ty

        case Star():
            return UNIT

        case Pair(a, b):
            return Prod(_infer(lang, ctx, a, path + (0,)), _infer(lang, ctx, b, path + (1,)))

        case Proj(i, a):
            ty = _infer(lang, ctx, a, path + (0,))
            if not isinstance(ty, Prod):
                raise TypeCheckError(f"Projection from non-product {ty}", path, t)
            return ty.left if i == 1 else ty.right

        case Lam(domain, body):
            _annotation(lang, domain, path, t)
            return Arrow(domain, _infer(lang, extend(ctx, domain), body, path + (0,)))

        case App(f, a):
            fn_ty = _infer(lang, ctx, f, path + (0,))
            if not isinstance(fn_ty, Arrow):
                raise TypeCheckError(f"Application of non-function {fn_ty}", path, t)
            arg_ty = _infer(lang, ctx, a, path + (1,))
            if arg_ty != fn_ty.domain:
                raise TypeCheckError(
                    f"Argument has type {arg_ty}, expected {fn_ty.domain}", path + (1,), a
                )
            return fn_ty.codomain

        case Raise(result, a):
            _annotation(lang, result, path, t)
            arg_ty = _infer(lang, ctx, a, path + (0,))
            if arg_ty != EMPTY:
                raise TypeCheckError(f"Raise of non-empty type {arg_ty}", path + (0,), a)
            return result

        case Inl(sum_ty, a) | Inr(sum_ty, a):
            _annotation(lang, sum_ty, path, t)
            assert isinstance(sum_ty, Sum)
            expected = sum_ty.left if isinstance(t, Inl) else sum_ty.right
            arg_ty = _infer(lang, ctx, a, path + (0,))
            if arg_ty != expected:
                raise TypeCheckError(
                    f"Injection payload has type {arg_ty}, expected {expected}", path + (0,), a
                )
            return sum_ty

        case Case(motive, s, left, right):
            _annotation(lang, motive, path, t)
            s_ty = _infer(lang, ctx, s, path + (0,))
            if not isinstance(s_ty, Sum):
                raise TypeCheckError(f"Case on non-sum {s_ty}", path + (0,), s)
            left_ty = _infer(lang, extend(ctx, s_ty.left), left, path + (1,))
            if left_ty != motive:
                raise TypeCheckError(
                    f"Left branch has type {left_ty}, expected {motive}", path + (1,), left
                )
            right_ty = _infer(lang, extend(ctx, s_ty.right), right, path + (2,))
            if right_ty != motive:
                raise TypeCheckError(
                    f"Right branch has type {right_ty}, expected {motive}", path + (2,), right
                )
            return motive

    raise TypeCheckError("Not a term", path, t)


def infer(lang: Language, ctx: Context, t: Term) -> Type:
    """
    Infer the type of t in ctx.

    Raises:
        TypeCheckError: t is ill-typed; `path` locates the failing subterm
    """
    return _infer(lang, ctx, t, ())


def check(lang: Language, ctx: Context, t: Term, ty: Type) -> bool:
    """True iff t infers exactly ty."""
    try:
        return infer(lang, ctx, t) == ty
    except TypeCheckError:
        return False
