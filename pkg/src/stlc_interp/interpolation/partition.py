"""
partition.py - Context partitions and their renamings.

A partition tags every context position Source or Target. Each side
keeps its entries in their original left-to-right order, and comes
with a renaming from the sub-context into the full context. Constants
are partitioned too: each constant has a side, falling back to
`default_const_side` when untagged.
"""

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from types import MappingProxyType

from stlc_interp.config import TAG_SOURCE, TAG_TARGET
from stlc_interp.errors import PartitionError
from stlc_interp.subst import Substitution
from stlc_interp.syntax.context import Context
from stlc_interp.syntax.terms import Var
from stlc_interp.syntax.types import Type


class Side(Enum):
    SOURCE = TAG_SOURCE
    TARGET = TAG_TARGET

    def flip(self) -> "Side":
        return Side.TARGET if self is Side.SOURCE else Side.SOURCE

    @property
    def label(self) -> str:
        return "source" if self is Side.SOURCE else "target"


@dataclass(frozen=True)
class Partition:
    context: Context
    tags: tuple[Side, ...]
    const_tags: Mapping[str, Side] = field(default_factory=dict)
    default_const_side: Side = Side.SOURCE

    def __post_init__(self) -> None:
        if len(self.tags) != len(self.context):
            raise PartitionError(
                "Tag count does not match context length",
                expected=len(self.context),
                actual=len(self.tags),
            )
        object.__setattr__(self, "const_tags", MappingProxyType(dict(sorted(self.const_tags.items()))))

    def __hash__(self) -> int:
        return hash((self.context, self.tags, tuple(self.const_tags.items()), self.default_const_side))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return (
            self.context == other.context
            and self.tags == other.tags
            and dict(self.const_tags) == dict(other.const_tags)
            and self.default_const_side is other.default_const_side
        )

    def positions(self, side: Side) -> tuple[int, ...]:
        """Left-to-right positions tagged `side`."""
        return tuple(pos for pos, tag in enumerate(self.tags) if tag is side)

    def sub_context(self, side: Side) -> Context:
        return tuple(self.context[pos] for pos in self.positions(side))

    def renaming(self, side: Side) -> Substitution:
        """Sub-context index i goes to the full-context index of its entry."""
        ps = self.positions(side)
        n, k = len(self.context), len(ps)
        return Substitution(tuple(Var(n - 1 - ps[k - 1 - i]) for i in range(k)), n)

    @cached_property
    def source_context(self) -> Context:
        return self.sub_context(Side.SOURCE)

    @cached_property
    def target_context(self) -> Context:
        return self.sub_context(Side.TARGET)

    @cached_property
    def source_renaming(self) -> Substitution:
        return self.renaming(Side.SOURCE)

    @cached_property
    def target_renaming(self) -> Substitution:
        return self.renaming(Side.TARGET)

    def locate(self, index: int) -> tuple[Side, int]:
        """Side and sub-context index of a full-context de Bruijn index."""
        n = len(self.context)
        if not 0 <= index < n:
            raise PartitionError(f"Index {index} is outside the context", expected=n, actual=index)
        pos = n - 1 - index
        side = self.tags[pos]
        later = sum(1 for q in range(pos + 1, n) if self.tags[q] is side)
        return side, later

    def constant_side(self, name: str) -> Side:
        return self.const_tags.get(name, self.default_const_side)

    def constants_on(self, side: Side, names: list[str]) -> list[str]:
        return [name for name in names if self.constant_side(name) is side]

    @property
    def tag_string(self) -> str:
        return format_tags(self.tags)


def make_partition(
    ctx: Context,
    tags: tuple[Side, ...] | list[Side] | str,
    const_tags: Mapping[str, Side] | None = None,
    default_const_side: Side = Side.SOURCE,
) -> Partition:
    """
    Build a partition of ctx.

    Raises:
        PartitionError: tags are malformed or do not match ctx
    """
    parsed = parse_tags(tags) if isinstance(tags, str) else tuple(tags)
    return Partition(tuple(ctx), parsed, dict(const_tags or {}), default_const_side)


def trivial_partition(ctx: Context, const_tags: Mapping[str, Side] | None = None) -> Partition:
    """Everything on the source side."""
    return make_partition(ctx, (Side.SOURCE,) * len(ctx), const_tags)


def reverse(p: Partition) -> Partition:
    """Swap every tag, including constant tags and the constant default."""
    return Partition(
        p.context,
        tuple(tag.flip() for tag in p.tags),
        {name: side.flip() for name, side in p.const_tags.items()},
        p.default_const_side.flip(),
    )


def extend(p: Partition, side: Side, ty: Type) -> Partition:
    """Bind one more variable on the given side."""
    return Partition(p.context + (ty,), p.tags + (side,), p.const_tags, p.default_const_side)


def parse_tags(text: str) -> tuple[Side, ...]:
    """Parse a tag string such as "sst" (leftmost = oldest binding)."""
    try:
        return tuple(Side(ch) for ch in text)
    except ValueError:
        raise PartitionError(
            f"Tag string must use only {TAG_SOURCE!r} and {TAG_TARGET!r}", actual=text
        ) from None


def format_tags(tags: tuple[Side, ...]) -> str:
    return "".join(tag.value for tag in tags)
