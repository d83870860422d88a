"""
types.py - Types and languages.

A type is one of Base | Unit | Empty | Prod | Sum | Arrow. Arrow, Prod
and Unit are negative; Base, Sum and Empty are positive.

A Language fixes the base types and the typed constants that terms
may mention.
"""

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType

from stlc_interp.errors import LanguageError, ValidationError


@dataclass(frozen=True, slots=True)
class Base:
    """A base type, drawn from the active language."""
    name: str

    def __post_init__(self) -> None:
        if not self.name:
            raise ValidationError("Base type name must be non-empty", field="name")


@dataclass(frozen=True, slots=True)
class Unit:
    """The unit type ⊤."""


@dataclass(frozen=True, slots=True)
class Empty:
    """The empty type ⊥."""


@dataclass(frozen=True, slots=True)
class Prod:
    left: "Type"
    right: "Type"


@dataclass(frozen=True, slots=True)
class Sum:
    left: "Type"
    right: "Type"


@dataclass(frozen=True, slots=True)
class Arrow:
    domain: "Type"
    codomain: "Type"


Type = Base | Unit | Empty | Prod | Sum | Arrow

UNIT: Unit = Unit()
EMPTY: Empty = Empty()


class TypePolarity(Enum):
    """Focusing polarity of a type former."""
    NEGATIVE = "negative"
    POSITIVE = "positive"


def polarity(ty: Type) -> TypePolarity:
    """Classify a type: Arrow/Prod/Unit are negative, Base/Sum/Empty positive."""
    match ty:
        case Arrow() | Prod() | Unit():
            return TypePolarity.NEGATIVE
        case Base() | Sum() | Empty():
            return TypePolarity.POSITIVE
    raise ValidationError("Not a type", value=ty)


def base_names(ty: Type) -> frozenset[str]:
    """All base names occurring in a type, regardless of polarity."""
    match ty:
        case Base(name):
            return frozenset({name})
        case Unit() | Empty():
            return frozenset()
        case Prod(a, b) | Sum(a, b) | Arrow(a, b):
            return base_names(a) | base_names(b)
    raise ValidationError("Not a type", value=ty)


def subformulas(ty: Type) -> Iterator[Type]:
    """Yield ty and all its subformulas, outermost first."""
    yield ty
    match ty:
        case Prod(a, b) | Sum(a, b) | Arrow(a, b):
            yield from subformulas(a)
            yield from subformulas(b)


def type_depth(ty: Type) -> int:
    """Constructor depth: base types, ⊤ and ⊥ have depth 0."""
    match ty:
        case Prod(a, b) | Sum(a, b) | Arrow(a, b):
            return 1 + max(type_depth(a), type_depth(b))
    return 0


@dataclass(frozen=True)
class Language:
    """
    A language: base types, constants, and the type of each constant.

    Constant names are unique by construction (they key a mapping);
    every base name used in a constant's type must be declared.
    """
    base_types: frozenset[str]
    constants: Mapping[str, Type] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "base_types", frozenset(self.base_types))
        object.__setattr__(
            self, "constants", MappingProxyType(dict(sorted(self.constants.items())))
        )
        for name, ty in self.constants.items():
            unknown = base_names(ty) - self.base_types
            if unknown:
                raise LanguageError(
                    f"Constant {name} mentions undeclared base types {sorted(unknown)}",
                    constant=name,
                )

    def __hash__(self) -> int:
        return hash((self.base_types, tuple(self.constants.items())))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Language):
            return NotImplemented
        return self.base_types == other.base_types and dict(self.constants) == dict(
            other.constants
        )

    @classmethod
    def from_bases(cls, names: Iterable[str]) -> "Language":
        """A constant-free language over the given base names."""
        return cls(base_types=frozenset(names))

    def type_of(self, name: str) -> Type | None:
        return self.constants.get(name)

    def restrict(self, names: Iterable[str]) -> "Language":
        """The sub-language keeping only the named constants."""
        keep = set(names)
        return Language(
            base_types=self.base_types,
            constants={c: ty for c, ty in self.constants.items() if c in keep},
        )


def vocab_closed(ty: Type, lang: Language) -> bool:
    """True iff every base name in ty is declared by lang."""
    return base_names(ty) <= lang.base_types
