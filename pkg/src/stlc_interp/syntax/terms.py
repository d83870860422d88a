"""
terms.py - De Bruijn terms.

Binders (Lam body, Case branches) bind exactly one variable, which is
index 0 inside. Annotations: Lam carries its domain, Raise its result
type, Inl/Inr the full sum type and Case its motive. Constants carry no
annotation; their type comes from the Language.

Term equality is structural and compares annotations, so
alpha-equivalence is plain equality.

Child indices (used by paths in reduction and type errors):
    Pair: 0 first, 1 second      Proj, Raise, Inl, Inr: 0 argument
    Lam: 0 body                  App: 0 function, 1 argument
    Case: 0 scrutinee, 1 left branch, 2 right branch
"""

from collections.abc import Iterator
from dataclasses import dataclass

from stlc_interp.errors import ValidationError
from stlc_interp.syntax.types import Sum, Type


@dataclass(frozen=True, slots=True)
class Var:
    index: int

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValidationError(
                f"de Bruijn index must be non-negative, got {self.index}",
                field="index",
                value=self.index,
            )


@dataclass(frozen=True, slots=True)
class Cst:
    name: str


@dataclass(frozen=True, slots=True)
class Star:
    pass


@dataclass(frozen=True, slots=True)
class Pair:
    first: "Term"
    second: "Term"


@dataclass(frozen=True, slots=True)
class Proj:
    index: int
    arg: "Term"

    def __post_init__(self) -> None:
        if self.index not in (1, 2):
            raise ValidationError(
                f"projection index must be 1 or 2, got {self.index}",
                field="index",
                value=self.index,
            )


@dataclass(frozen=True, slots=True)
class Lam:
    domain: Type
    body: "Term"


@dataclass(frozen=True, slots=True)
class App:
    fn: "Term"
    arg: "Term"


@dataclass(frozen=True, slots=True)
class Raise:
    result: Type
    arg: "Term"


@dataclass(frozen=True, slots=True)
class Inl:
    sum: Type
    arg: "Term"

    def __post_init__(self) -> None:
        if not isinstance(self.sum, Sum):
            raise ValidationError("inl must be annotated with a sum type", field="sum", value=self.sum)


@dataclass(frozen=True, slots=True)
class Inr:
    sum: Type
    arg: "Term"

    def __post_init__(self) -> None:
        if not isinstance(self.sum, Sum):
            raise ValidationError("inr must be annotated with a sum type", field="sum", value=self.sum)


@dataclass(frozen=True, slots=True)
class Case:
    motive: Type
    scrutinee: "Term"
    left: "Term"
    right: "Term"


Term = Var | Cst | Star | Pair | Proj | Lam | App | Raise | Inl | Inr | Case

STAR: Star = Star()

Path = tuple[int, ...]


def children(t: Term) -> tuple[Term, ...]:
    """Immediate subterms in child-index order."""
    match t:
        case Var() | Cst() | Star():
            return ()
        case Pair(a, b) | App(a, b):
            return (a, b)
        case Proj(_, a) | Raise(_, a) | Inl(_, a) | Inr(_, a) | Lam(_, a):
            return (a,)
        case Case(_, s, bl, br):
            return (s, bl, br)
    raise ValidationError("Not a term", value=t)


def binds_at(t: Term, child: int) -> bool:
    """True when the given child sits under one new binder."""
    match t:
        case Lam():
            return child == 0
        case Case():
            return child in (1, 2)
    return False


def replace_child(t: Term, child: int, new: Term) -> Term:
    """Rebuild t with one immediate subterm replaced."""
    match t, child:
        case Pair(_, b), 0:
            return Pair(new, b)
        case Pair(a, _), 1:
            return Pair(a, new)
        case App(_, b), 0:
            return App(new, b)
        case App(a, _), 1:
            return App(a, new)
        case Proj(i, _), 0:
            return Proj(i, new)
        case Raise(ty, _), 0:
            return Raise(ty, new)
        case Inl(ty, _), 0:
            return Inl(ty, new)
        case Inr(ty, _), 0:
            return Inr(ty, new)
        case Lam(ty, _), 0:
            return Lam(ty, new)
        case Case(ty, _, bl, br), 0:
            return Case(ty, new, bl, br)
        case Case(ty, s, _, br), 1:
            return Case(ty, s, new, br)
        case Case(ty, s, bl, _), 2:
            return Case(ty, s, bl, new)
    raise ValidationError(f"Term has no child {child}", field="child", value=t)


def subterm_at(t: Term, path: Path) -> Term | None:
    """Follow a path of child indices; None if it leaves the term."""
    for child in path:
        kids = children(t)
        if not 0 <= child < len(kids):
            return None
        t = kids[child]
    return t


def replace_at(t: Term, path: Path, new: Term) -> Term:
    if not path:
        return new
    head, rest = path[0], path[1:]
    return replace_child(t, head, replace_at(children(t)[head], rest, new))


def size(t: Term) -> int:
    """AST node count; type annotations are not counted."""
    return 1 + sum(size(c) for c in children(t))


def free_indices(t: Term, depth: int = 0) -> frozenset[int]:
    """Free de Bruijn indices of t, relative to its own context."""
    match t:
        case Var(i):
            return frozenset({i - depth}) if i >= depth else frozenset()
    result: frozenset[int] = frozenset()
    for child, sub in enumerate(children(t)):
        inner = depth + 1 if binds_at(t, child) else depth
        result |= free_indices(sub, inner)
    return result


def constants_of(t: Term) -> frozenset[str]:
    """Names of all constants mentioned in t."""
    match t:
        case Cst(name):
            return frozenset({name})
    result: frozenset[str] = frozenset()
    for sub in children(t):
        result |= constants_of(sub)
    return result


def iter_subterms(t: Term, path: Path = ()) -> Iterator[tuple[Path, Term]]:
    """Pre-order (root first, left to right) walk yielding (path, subterm)."""
    yield path, t
    for child, sub in enumerate(children(t)):
        yield from iter_subterms(sub, path + (child,))


def annotations(t: Term) -> Iterator[Type]:
    """Every type annotation in t, pre-order."""
    for _, sub in iter_subterms(t):
        match sub:
            case Lam(ty, _) | Raise(ty, _) | Inl(ty, _) | Inr(ty, _) | Case(ty, _, _, _):
                yield ty
