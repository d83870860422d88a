"""
test_enumeration.py - Tests for type-directed enumeration.
"""

import pytest

from stlc_interp.bidir import check_nf
from stlc_interp.enumeration import (
    SizeCount,
    count_terms,
    default_cut_types,
    enum_nfs,
    enum_terms,
    enum_types,
)
from stlc_interp.reduction import normalize
from stlc_interp.syntax import EMPTY, UNIT, App, Arrow, Base, Cst, Lam, Pair, Proj, Sum, Var, size
from stlc_interp.typecheck import infer

P = Base("P")
Q = Base("Q")


class TestEnumTypes:
    """Tests for enum_types."""

    def test_depth_zero(self, lang_pq):
        """Verify that depth zero lists the atomic types."""
        assert enum_types(lang_pq, 0) == [P, Q, UNIT, EMPTY]

    def test_depth_one_adds_every_binary_former(self, lang_p):
        """Verify that depth one adds every binary former without duplicates."""
        types = enum_types(lang_p, 1)
        assert len(types) == 3 + 3 * 9
        assert len(set(types)) == len(types)
        assert Arrow(EMPTY, P) in types

    def test_negative_depth(self, lang_p):
        """Verify that a negative depth is refused."""
        with pytest.raises(ValueError):
            enum_types(lang_p, -1)

    def test_default_cut_types_include_subformulas(self, lang_p):
        """Verify that default cut types include the subformulas of the context."""
        cuts = default_cut_types(lang_p, (Arrow(P, Sum(P, UNIT)),), P, depth=0)
        assert cuts[:3] == [P, UNIT, EMPTY]
        assert Sum(P, UNIT) in cuts
        assert len(set(cuts)) == len(cuts)


class TestEnumTerms:
    """Tests for enum_terms, enum_nfs and count_terms."""

    def test_smallest_terms(self, lang_p):
        """Verify that the only small term of P is the variable."""
        assert enum_terms(lang_p, (P,), P, 3, cut_types=[P]) == [Var(0)]

    def test_counts_by_size(self, lang_p):
        """Verify the term and normal form counts per size."""
        assert count_terms(lang_p, (P,), P, 4, cut_types=[P]) == [
            SizeCount(1, 1, 1),
            SizeCount(2, 0, 0),
            SizeCount(3, 0, 0),
            SizeCount(4, 4, 0),
        ]

    def test_size_four_redexes(self, lang_p):
        """Verify that size four already contains redexes."""
        found = enum_terms(lang_p, (P,), P, 4, cut_types=[P])
        assert Proj(1, Pair(Var(0), Var(0))) in found
        assert App(Lam(P, Var(1)), Var(0)) in found

    def test_identity_function(self, lang_p):
        """Verify that the identity is the only small normal arrow."""
        assert enum_nfs(lang_p, (), Arrow(P, P), 2, cut_types=[P]) == [Lam(P, Var(0))]

    def test_constants_are_leaves(self, lang_constants):
        """Verify that constants are enumerated as leaves."""
        found = enum_terms(lang_constants, (), P, 3, cut_types=[Q])
        assert found == [App(Cst("f"), Cst("d"))]

    def test_enumerated_terms_are_well_typed_and_sized(self, lang_p):
        """Verify that every enumerated term has the target type and size bound."""
        ctx = (Sum(P, P),)
        ty = Sum(P, P)
        for n in range(1, 6):
            for t in enum_terms(lang_p, ctx, ty, n, cut_types=[P]):
                assert size(t) <= n
                assert infer(lang_p, ctx, t) == ty

    def test_normal_forms_reached(self, lang_p):
        """Verify that every enumerated term normalizes to a normal form."""
        ctx = (Sum(P, P), P)
        for t in enum_terms(lang_p, ctx, P, 5, cut_types=[P]):
            assert check_nf(lang_p, ctx, normalize(lang_p, ctx, t), P)
