"""
context.py - Typing contexts.

A context is a tuple of types listed oldest binding first. De Bruijn
index 0 refers to the most recently bound variable, i.e. the rightmost
entry.
"""

from stlc_interp.syntax.types import Type

Context = tuple[Type, ...]


def lookup(ctx: Context, index: int) -> Type | None:
    """Type of de Bruijn index `index`, or None when unbound."""
    if 0 <= index < len(ctx):
        return ctx[len(ctx) - 1 - index]
    return None


def extend(ctx: Context, ty: Type) -> Context:
    """Bind one more variable; it becomes index 0."""
    return ctx + (ty,)


def position_of(ctx: Context, index: int) -> int:
    """Left-to-right position of a de Bruijn index (0 = oldest)."""
    return len(ctx) - 1 - index
