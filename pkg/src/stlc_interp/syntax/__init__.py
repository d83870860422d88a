"""
syntax - Types, languages, contexts, terms and eliminations.
"""

from stlc_interp.syntax.types import (
    Arrow,
    Base,
    Empty,
    EMPTY,
    Language,
    Prod,
    Sum,
    Type,
    TypePolarity,
    Unit,
    UNIT,
    base_names,
    polarity,
    subformulas,
    type_depth,
    vocab_closed,
)
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
    STAR,
    Term,
    Var,
    children,
    constants_of,
    free_indices,
    annotations,
    iter_subterms,
    replace_at,
    replace_child,
    size,
    subterm_at,
)
from stlc_interp.syntax.elim import (
    EApp,
    ECase,
    EProj,
    ERaise,
    Elimination,
    unzip_elim,
    zip_elim,
)

__all__ = [
    # types
    "Arrow",
    "Base",
    "Empty",
    "EMPTY",
    "Language",
    "Prod",
    "Sum",
    "Type",
    "TypePolarity",
    "Unit",
    "UNIT",
    "base_names",
    "polarity",
    "subformulas",
    "type_depth",
    "vocab_closed",
    # context
    "Context",
    "extend",
    "lookup",
    # terms
    "App",
    "Case",
    "Cst",
    "Inl",
    "Inr",
    "Lam",
    "Pair",
    "Path",
    "Proj",
    "Raise",
    "Star",
    "STAR",
    "Term",
    "Var",
    "children",
    "constants_of",
    "free_indices",
    "annotations",
    "iter_subterms",
    "replace_at",
    "replace_child",
    "size",
    "subterm_at",
    # eliminations
    "EApp",
    "ECase",
    "EProj",
    "ERaise",
    "Elimination",
    "unzip_elim",
    "zip_elim",
]
