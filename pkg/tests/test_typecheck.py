"""
test_typecheck.py - Tests for type inference on full terms.
"""

import pytest

from stlc_interp.errors import TypeCheckError
from stlc_interp.syntax import (
    EMPTY,
    STAR,
    UNIT,
    App,
    Arrow,
    Base,
    Case,
    Cst,
    Inl,
    Inr,
    Lam,
    Pair,
    Prod,
    Proj,
    Raise,
    Sum,
    Var,
)
from stlc_interp.typecheck import check, infer

P = Base("P")
Q = Base("Q")
R = Base("R")


class TestInference:
    """Tests for well-typed terms."""

    def test_variables_and_star(self, lang_pq):
        """Verify the types of variables and star."""
        assert infer(lang_pq, (P, Q), Var(1)) == P
        assert infer(lang_pq, (), STAR) == UNIT

    def test_constants_come_from_the_language(self, lang_constants):
        """Verify that constant types come from the language."""
        assert infer(lang_constants, (), App(Cst("f"), Cst("d"))) == P

    def test_pairs_and_projections(self, lang_pq):
        """Verify the types of pairs and projections."""
        assert infer(lang_pq, (P, Q), Pair(Var(1), Var(0))) == Prod(P, Q)
        assert infer(lang_pq, (Prod(P, Q),), Proj(2, Var(0))) == Q

    def test_lambda_and_application(self, lang_pq):
        """Verify the types of lambdas and applications."""
        assert infer(lang_pq, (Q,), Lam(P, Var(1))) == Arrow(P, Q)
        assert infer(lang_pq, (Arrow(P, Q), P), App(Var(1), Var(0))) == Q

    def test_raise_takes_its_annotation(self, lang_pq):
        """Verify that raise has its annotated type."""
        assert infer(lang_pq, (EMPTY,), Raise(Arrow(P, Q), Var(0))) == Arrow(P, Q)

    def test_injections_and_case(self, lang_pq):
        """Verify the types of injections and case."""
        s = Sum(P, Q)
        assert infer(lang_pq, (Q,), Inr(s, Var(0))) == s
        t = Case(Sum(Q, P), Var(0), Inr(Sum(Q, P), Var(0)), Inl(Sum(Q, P), Var(0)))
        assert infer(lang_pq, (s,), t) == Sum(Q, P)

    def test_check(self, lang_pq):
        """Verify that check compares against the inferred type."""
        assert check(lang_pq, (P,), Var(0), P)
        assert not check(lang_pq, (P,), Var(0), Q)
        assert not check(lang_pq, (), Var(0), P)


class TestTypeErrors:
    """Tests for error paths."""

    def test_unbound_variable(self, lang_pq):
        """Verify that an unbound variable is refused at its path."""
        with pytest.raises(TypeCheckError) as exc_info:
            infer(lang_pq, (P,), Var(1))
        assert exc_info.value.path == ()

    def test_argument_mismatch_points_at_argument(self, lang_pq):
        """Verify that a bad argument is reported at its path."""
        with pytest.raises(TypeCheckError) as exc_info:
            infer(lang_pq, (Arrow(P, Q),), Lam(Q, App(Var(1), Var(0))))
        assert exc_info.value.path == (0, 1)

    def test_application_of_non_function(self, lang_pq):
        """Verify that applying a non-function is refused."""
        with pytest.raises(TypeCheckError):
            infer(lang_pq, (P,), App(Var(0), Var(0)))

    def test_projection_from_non_product(self, lang_pq):
        """Verify that projecting a non-product is refused."""
        with pytest.raises(TypeCheckError):
            infer(lang_pq, (P,), Proj(1, Var(0)))

    def test_raise_needs_empty(self, lang_pq):
        """Verify that raise needs an empty argument."""
        with pytest.raises(TypeCheckError) as exc_info:
            infer(lang_pq, (P,), Raise(Q, Var(0)))
        assert exc_info.value.path == (0,)

    def test_case_branch_mismatch(self, lang_pq):
        """Verify that mismatched branches are reported at the branch."""
        with pytest.raises(TypeCheckError) as exc_info:
            infer(lang_pq, (Sum(P, Q),), Case(P, Var(0), Var(0), Var(0)))
        assert exc_info.value.path == (2,)

    def test_case_on_non_sum(self, lang_pq):
        """Verify that case on a non-sum is refused."""
        with pytest.raises(TypeCheckError):
            infer(lang_pq, (P,), Case(P, Var(0), Var(0), Var(0)))

    def test_undeclared_annotation(self, lang_pq):
        """Verify that an undeclared base in an annotation is refused."""
        with pytest.raises(TypeCheckError):
            infer(lang_pq, (), Lam(R, Var(0)))

    def test_unknown_constant(self, lang_pq):
        """Verify that an unknown constant is refused."""
        with pytest.raises(TypeCheckError):
            infer(lang_pq, (), Cst("c"))
