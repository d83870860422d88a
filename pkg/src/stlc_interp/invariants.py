"""
invariants.py - Core invariant definitions and enforcement.

Invariant checks are called at critical points to detect violations
early. A violation is a bug in this library, never bad input, and
halts with InvariantViolationError.
"""

from typing import TYPE_CHECKING

from stlc_interp.bidir import check_nf
from stlc_interp.errors import InvariantViolationError
from stlc_interp.subst import Substitution, check_sub_typing, is_renaming
from stlc_interp.syntax.context import Context
from stlc_interp.syntax.terms import Term
from stlc_interp.syntax.types import Language, Type
from stlc_interp.typecheck import check

if TYPE_CHECKING:
    from stlc_interp.interpolation.partition import Partition


class Invariants:
    """
    Laws the engines rely on.

    Violation of any invariant indicates a critical bug.
    """

    NORMAL_FORM = "NORMAL_FORM"
    TYPE_PRESERVATION = "TYPE_PRESERVATION"
    PARTITION_RENAMING = "PARTITION_RENAMING"

    @staticmethod
    def assert_normal_form(lang: Language, ctx: Context, t: Term, ty: Type) -> None:
        """
        A normalizer result checks as a normal form of its type.

        Raises:
            InvariantViolationError: If t is not a normal form of ty
        """
        if not check_nf(lang, ctx, t, ty):
            raise InvariantViolationError(
                Invariants.NORMAL_FORM, f"Normalizer result {t!r} is not a normal form of {ty!r}"
            )

    @staticmethod
    def assert_type_preserved(lang: Language, ctx: Context, t: Term, ty: Type) -> None:
        """
        Raises:
            InvariantViolationError: If t no longer has type ty
        """
        if not check(lang, ctx, t, ty):
            raise InvariantViolationError(
                Invariants.TYPE_PRESERVATION, f"Term {t!r} lost type {ty!r}"
            )

    @staticmethod
    def assert_partition_renamings(lang: Language, partition: "Partition") -> None:
        """
        Both side renamings are variable-only and typing-correct into the
        full context.

        Raises:
            InvariantViolationError: If a renaming is malformed
        """
        sides: list[tuple[str, Substitution, Context]] = [
            ("source", partition.source_renaming, partition.source_context),
            ("target", partition.target_renaming, partition.target_context),
        ]
        for name, renaming, sub_context in sides:
            if not is_renaming(renaming):
                raise InvariantViolationError(
                    Invariants.PARTITION_RENAMING, f"The {name} renaming is not variable-only"
                )
            if not check_sub_typing(lang, partition.context, renaming, sub_context):
                raise InvariantViolationError(
                    Invariants.PARTITION_RENAMING,
                    f"The {name} renaming does not type into the full context",
                )
