"""
enumeration.py - Type-directed enumeration of types and terms.

Terms are generated by target type rather than filtered from raw trees.
Most annotations are forced by the requested type (a Lam's domain, an
injection's sum, a Raise's result, a Case's motive). The only free
choices are cut types: the domain of an App, the sibling component
under a Proj and the two summands of a Case scrutinee. These range over
a finite, caller-controlled list, so "all terms of a size" means all
terms whose cut types are drawn from that list.
"""

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from stlc_interp.bidir import check_nf
from stlc_interp.config import ANNOTATION_DEPTH
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
    STAR,
    Term,
    Var,
)
from stlc_interp.syntax.types import (
    EMPTY,
    UNIT,
    Arrow,
    Base,
    Language,
    Prod,
    Sum,
    Type,
    Unit,
    subformulas,
)

logger = logging.getLogger(__name__)


def enum_types(lang: Language, depth: int) -> list[Type]:
    """
    All types of constructor depth <= depth over lang's base types.

    Depth 0 is the sorted base types, then ⊤, then ⊥. Each further level
    appends Prod, Sum and Arrow over everything before it.
    """
    if depth < 0:
        raise ValueError(f"depth must be non-negative, got {depth}")
    types: list[Type] = [Base(name) for name in sorted(lang.base_types)] + [UNIT, EMPTY]
    seen = set(types)
    for _ in range(depth):
        previous = list(types)
        for former in (Prod, Sum, Arrow):
            for a in previous:
                for b in previous:
                    ty = former(a, b)
                    if ty not in seen:
                        seen.add(ty)
                        types.append(ty)
    return types


def default_cut_types(
    lang: Language, ctx: Context, ty: Type, depth: int = ANNOTATION_DEPTH
) -> list[Type]:
    """enum_types at the given depth, then subformulas of ctx and ty."""
    found = list(enum_types(lang, depth))
    for entry in (*ctx, ty):
        found.extend(subformulas(entry))
    return list(dict.fromkeys(found))


@dataclass
class TermEnumerator:
    """Memoized enumeration of terms of an exact size."""

    lang: Language
    cut_types: tuple[Type, ...]

    def __post_init__(self) -> None:
        self._memo: dict[tuple[Context, Type, int], tuple[Term, ...]] = {}

    def exact(self, ctx: Context, ty: Type, n: int) -> tuple[Term, ...]:
        """All terms of type ty in ctx with exactly n nodes."""
        if n < 1:
            return ()
        key = (ctx, ty, n)
        cached = self._memo.get(key)
        if cached is None:
            cached = tuple(self._generate(ctx, ty, n))
            self._memo[key] = cached
        return cached

    def _splits(self, total: int, parts: int) -> Iterator[tuple[int, ...]]:
        if parts == 1:
            if total >= 1:
                yield (total,)
            return
        for first in range(1, total - parts + 2):
            for rest in self._splits(total - first, parts - 1):
                yield (first, *rest)

    def _generate(self, ctx: Context, ty: Type, n: int) -> Iterator[Term]:
        if n == 1:
            for i in range(len(ctx)):
                if lookup(ctx, i) == ty:
                    yield Var(i)
            for name, const_ty in self.lang.constants.items():
                if const_ty == ty:
                    yield Cst(name)
            if isinstance(ty, Unit):
                yield STAR
            return

        # Introductions
        match ty:
            case Prod(a, b):
                for ka, kb in self._splits(n - 1, 2):
                    for first in self.exact(ctx, a, ka):
                        for second in self.exact(ctx, b, kb):
                            yield Pair(first, second)
            case Arrow(a, b):
                for body in self.exact(extend(ctx, a), b, n - 1):
                    yield Lam(a, body)
            case Sum(a, b):
                for payload in self.exact(ctx, a, n - 1):
                    yield Inl(ty, payload)
                for payload in self.exact(ctx, b, n - 1):
                    yield Inr(ty, payload)

        # Eliminations
        for other in self.cut_types:
            for pair in self.exact(ctx, Prod(ty, other), n - 1):
                yield Proj(1, pair)
            for pair in self.exact(ctx, Prod(other, ty), n - 1):
                yield Proj(2, pair)
        for domain in self.cut_types if n >= 3 else ():
            for kf, ka in self._splits(n - 1, 2):
                functions = self.exact(ctx, Arrow(domain, ty), kf)
                if not functions:
                    continue
                arguments = self.exact(ctx, domain, ka)
                for fn in functions:
                    for arg in arguments:
                        yield App(fn, arg)
        for absurd in self.exact(ctx, EMPTY, n - 1):
            yield Raise(ty, absurd)
        if n < 4:
            return
        for left_ty in self.cut_types:
            for right_ty in self.cut_types:
                sum_ty = Sum(left_ty, right_ty)
                for ks, kl, kr in self._splits(n - 1, 3):
                    scrutinees = self.exact(ctx, sum_ty, ks)
                    if not scrutinees:
                        continue
                    lefts = self.exact(extend(ctx, left_ty), ty, kl)
                    rights = self.exact(extend(ctx, right_ty), ty, kr)
                    for s in scrutinees:
                        for bl in lefts:
                            for br in rights:
                                yield Case(ty, s, bl, br)


def _enumerator(
    lang: Language, ctx: Context, ty: Type, cut_types: Iterable[Type] | None
) -> TermEnumerator:
    cuts = default_cut_types(lang, ctx, ty) if cut_types is None else list(dict.fromkeys(cut_types))
    return TermEnumerator(lang, tuple(cuts))


def enum_terms(
    lang: Language,
    ctx: Context,
    ty: Type,
    size: int,
    cut_types: Iterable[Type] | None = None,
) -> list[Term]:
    """
    Every term of type ty in ctx with at most `size` nodes, smallest
    first, without duplicates.
    """
    enumerator = _enumerator(lang, ctx, ty, cut_types)
    found: dict[Term, None] = {}
    for n in range(1, size + 1):
        for t in enumerator.exact(ctx, ty, n):
            found.setdefault(t, None)
    logger.debug("enumerated %d terms up to size %d", len(found), size)
    return list(found)


def enum_nfs(
    lang: Language,
    ctx: Context,
    ty: Type,
    size: int,
    cut_types: Iterable[Type] | None = None,
) -> list[Term]:
    """The normal forms among enum_terms, in the same order."""
    return [t for t in enum_terms(lang, ctx, ty, size, cut_types) if check_nf(lang, ctx, t, ty)]


@dataclass(frozen=True, slots=True)
class SizeCount:
    size: int
    terms: int
    normal_forms: int


def count_terms(
    lang: Language,
    ctx: Context,
    ty: Type,
    size: int,
    cut_types: Iterable[Type] | None = None,
) -> list[SizeCount]:
    """Number of terms and of normal forms of each exact size up to `size`."""
    enumerator = _enumerator(lang, ctx, ty, cut_types)
    counts = []
    for n in range(1, size + 1):
        terms = enumerator.exact(ctx, ty, n)
        normal = sum(1 for t in terms if check_nf(lang, ctx, t, ty))
        counts.append(SizeCount(n, len(terms), normal))
    return counts
