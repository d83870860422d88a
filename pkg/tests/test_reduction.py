"""
test_reduction.py - Tests for one-step reduction and normalization.
"""

import pytest

from stlc_interp.errors import FuelExhaustedError, TraceError
from stlc_interp.reduction import (
    Redex,
    Rule,
    TraceStep,
    contract,
    first_redex,
    normalize,
    normalize_traced,
    redexes,
    reducts,
    replay,
    retype,
    shift_elim,
    step,
)
from stlc_interp.syntax import (
    EMPTY,
    STAR,
    App,
    Arrow,
    Base,
    Case,
    EApp,
    ECase,
    EProj,
    ERaise,
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

P = Base("P")
Q = Base("Q")
S = Sum(P, P)

# case (case x of inl a → inl a | inr a → inr a) of inl b → b | inr b → b
NESTED_CASE = Case(P, Case(S, Var(0), Inl(S, Var(0)), Inr(S, Var(0))), Var(0), Var(0))


class TestBetaRules:
    """Tests for the root β rules."""

    def test_pair_projections(self):
        """Verify that projections of a pair contract to the component."""
        assert reducts(Proj(1, Pair(Var(0), STAR))) == [(Rule.PAIR_BETA_1, Var(0))]
        assert reducts(Proj(2, Pair(Var(0), STAR))) == [(Rule.PAIR_BETA_2, STAR)]

    def test_function_beta_substitutes(self):
        """Verify that function beta substitutes the argument."""
        assert reducts(App(Lam(P, Var(1)), Var(0))) == [(Rule.FUN_BETA, Var(0))]
        assert reducts(App(Lam(P, Pair(Var(0), Var(1))), STAR)) == [
            (Rule.FUN_BETA, Pair(STAR, Var(0)))
        ]

    def test_injection_beta(self):
        """Verify that a case on an injection picks its branch."""
        left = Case(P, Inl(S, Var(0)), Var(0), Var(1))
        assert reducts(left) == [(Rule.INL_BETA, Var(0))]
        right = Case(P, Inr(Sum(Q, P), Var(0)), Var(1), Var(0))
        assert reducts(right) == [(Rule.INR_BETA, Var(0))]

    def test_normal_terms_have_no_reducts(self):
        """Verify that normal terms have no reducts."""
        assert reducts(App(Var(0), Lam(P, Var(0)))) == []
        assert step(Var(0)) is None


class TestCommutingConversions:
    """Tests for Raise and Case commuting past eliminations."""

    def test_raise_under_projection(self):
        """Verify that raise absorbs a projection."""
        t = Proj(1, Raise(Prod(P, Q), Var(0)))
        assert reducts(t) == [(Rule.COMM_RAISE, Raise(P, Var(0)))]

    def test_raise_under_raise_collapses(self):
        """Verify that nested raises collapse."""
        t = Raise(P, Raise(EMPTY, Var(0)))
        assert reducts(t) == [(Rule.COMM_RAISE, Raise(P, Var(0)))]

    def test_case_under_application_shifts_argument(self):
        """Verify that an argument pushed into case branches is weakened."""
        f = Arrow(P, Q)
        t = App(Case(f, Var(0), Var(0), Var(0)), Var(1))
        expected = Case(Q, Var(0), App(Var(0), Var(2)), App(Var(0), Var(2)))
        assert reducts(t) == [(Rule.COMM_CASE, expected)]

    def test_case_under_case(self):
        """Verify that an outer case is pushed into the inner branches."""
        expected = Case(
            P,
            Var(0),
            Case(P, Inl(S, Var(0)), Var(0), Var(0)),
            Case(P, Inr(S, Var(0)), Var(0), Var(0)),
        )
        assert reducts(NESTED_CASE) == [(Rule.COMM_CASE, expected)]

    def test_ill_typed_elimination_does_not_fire(self):
        """Verify that an ill-typed commuting conversion does not fire."""
        # π1 applied to a raise annotated with a non-product
        assert reducts(Proj(1, Raise(P, Var(0)))) == []

    def test_retype(self):
        """Verify the result type of each elimination."""
        assert retype(EApp(STAR), Arrow(P, Q)) == Q
        assert retype(EProj(2), Prod(P, Q)) == Q
        assert retype(EProj(1), P) is None
        assert retype(ECase(Q, Var(0), Var(0)), S) == Q
        assert retype(ERaise(Q), EMPTY) == Q

    def test_shift_elim(self):
        """Verify that shifting an elimination weakens its terms."""
        assert shift_elim(EApp(Var(0))) == EApp(Var(1))
        assert shift_elim(ECase(P, Var(1), Var(0))) == ECase(P, Var(2), Var(0))
        assert shift_elim(EProj(1)) == EProj(1)


class TestCongruence:
    """Tests for redex order and contraction at a path."""

    def test_root_first_then_left_to_right(self):
        """Verify that redexes are ordered root first then left to right."""
        inner = Proj(1, Pair(Var(0), Var(0)))
        t = App(Lam(P, inner), inner)
        assert [(r.rule, r.path) for r in redexes(t)] == [
            (Rule.FUN_BETA, ()),
            (Rule.PAIR_BETA_1, (0, 0)),
            (Rule.PAIR_BETA_1, (1,)),
        ]

    def test_first_redex_is_the_root(self):
        """Verify that the first redex of a nested case is at the root."""
        redex, result = first_redex(NESTED_CASE)
        assert redex == Redex(Rule.COMM_CASE, ())

    def test_contract_at_path(self):
        """Verify that contraction fails for a wrong rule or path."""
        t = Pair(STAR, Proj(2, Pair(Var(0), Var(1))))
        assert contract(t, Redex(Rule.PAIR_BETA_2, (1,))) == Pair(STAR, Var(1))
        assert contract(t, Redex(Rule.PAIR_BETA_1, (1,))) is None
        assert contract(t, Redex(Rule.PAIR_BETA_2, (3,))) is None


class TestNormalization:
    """Tests for the deterministic normalizer."""

    def test_trace_of_nested_case(self, lang_p):
        """Verify the trace of normalizing a nested case."""
        result = normalize_traced(lang_p, (S,), NESTED_CASE)
        assert result.term == Case(P, Var(0), Var(0), Var(0))
        assert [(s.redex.rule, s.redex.path) for s in result.trace] == [
            (Rule.COMM_CASE, ()),
            (Rule.INL_BETA, (1,)),
            (Rule.INR_BETA, (2,)),
        ]
        assert result.steps == 3

    def test_normal_form_is_fixed(self, lang_p):
        """Verify that a normal form normalizes to itself in no steps."""
        t = Lam(P, Var(0))
        result = normalize_traced(lang_p, (), t)
        assert result.term == t
        assert result.trace == ()

    def test_raise_chain(self, lang_pq):
        """Verify that a chain of raises normalizes to one."""
        t = Proj(2, Raise(Prod(P, Q), Raise(EMPTY, Var(0))))
        assert normalize(lang_pq, (EMPTY,), t) == Raise(Q, Var(0))

    def test_fuel_exhaustion(self, lang_p):
        """Verify that running out of fuel raises."""
        with pytest.raises(FuelExhaustedError) as exc_info:
            normalize(lang_p, (S,), NESTED_CASE, fuel=2)
        assert exc_info.value.fuel == 2

    def test_zero_fuel_on_normal_form(self, lang_p):
        """Verify that a normal form needs no fuel."""
        assert normalize(lang_p, (P,), Var(0), fuel=0) == Var(0)


class TestReplay:
    """Tests for trace replay."""

    def test_replay_reaches_the_normal_form(self, lang_p):
        """Verify that replaying a trace reaches its result."""
        result = normalize_traced(lang_p, (S,), NESTED_CASE)
        assert replay(NESTED_CASE, result.trace) == result.term

    def test_replay_rejects_wrong_rule(self, lang_p):
        """Verify that replay rejects a step with the wrong rule."""
        result = normalize_traced(lang_p, (S,), NESTED_CASE)
        bad = (TraceStep(Redex(Rule.FUN_BETA, ()), result.trace[0].result),) + result.trace[1:]
        with pytest.raises(TraceError) as exc_info:
            replay(NESTED_CASE, bad)
        assert exc_info.value.step == 0

    def test_replay_rejects_wrong_result(self, lang_p):
        """Verify that replay rejects a step with the wrong result."""
        result = normalize_traced(lang_p, (S,), NESTED_CASE)
        bad = result.trace[:1] + (TraceStep(result.trace[1].redex, STAR),) + result.trace[2:]
        with pytest.raises(TraceError) as exc_info:
            replay(NESTED_CASE, bad)
        assert exc_info.value.step == 1
