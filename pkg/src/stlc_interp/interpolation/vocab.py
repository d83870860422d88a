"""
vocab.py - Polarized vocabulary of types, contexts and constants.

    b⁺ = {b}   b⁻ = ∅      ⊤ and ⊥ contribute nothing
    (A × B)^p = (A + B)^p = A^p ∪ B^p
    (A → B)^p = A^p̄ ∪ B^p
"""

from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from functools import reduce

from stlc_interp.errors import ValidationError
from stlc_interp.syntax.context import Context
from stlc_interp.syntax.types import Arrow, Base, Empty, Language, Prod, Sum, Type, Unit


class Polarity(Enum):
    POS = "+"
    NEG = "-"

    def flip(self) -> "Polarity":
        return Polarity.NEG if self is Polarity.POS else Polarity.POS


@dataclass(frozen=True, slots=True)
class VocabSets:
    pos: frozenset[str] = frozenset()
    neg: frozenset[str] = frozenset()

    def get(self, polarity: Polarity) -> frozenset[str]:
        return self.pos if polarity is Polarity.POS else self.neg

    def union(self, other: "VocabSets") -> "VocabSets":
        return VocabSets(self.pos | other.pos, self.neg | other.neg)

    def flipped(self) -> "VocabSets":
        return VocabSets(self.neg, self.pos)

    def __or__(self, other: "VocabSets") -> "VocabSets":
        return self.union(other)

    def __le__(self, other: "VocabSets") -> bool:
        return self.pos <= other.pos and self.neg <= other.neg

    def as_dict(self) -> dict[str, list[str]]:
        return {"pos": sorted(self.pos), "neg": sorted(self.neg)}


EMPTY_VOCAB = VocabSets()


def vocab(ty: Type) -> VocabSets:
    """Positive and negative base names of a type."""
    match ty:
        case Base(name):
            return VocabSets(pos=frozenset({name}))
        case Unit() | Empty():
            return EMPTY_VOCAB
        case Prod(a, b) | Sum(a, b):
            return vocab(a) | vocab(b)
        case Arrow(a, b):
            return vocab(a).flipped() | vocab(b)
    raise ValidationError("Not a type", value=ty)


def vocab_all(types: Iterable[Type]) -> VocabSets:
    return reduce(VocabSets.union, (vocab(ty) for ty in types), EMPTY_VOCAB)


def vocab_ctx(ctx: Context) -> VocabSets:
    """Pointwise union over the context entries."""
    return vocab_all(ctx)


def constants_vocab(lang: Language, names: Iterable[str] | None = None) -> VocabSets:
    """Union of the vocabularies of the named constants' types (all when None)."""
    selected = lang.constants.keys() if names is None else names
    return vocab_all(ty for name in selected if (ty := lang.type_of(name)) is not None)
