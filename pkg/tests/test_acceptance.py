"""
test_acceptance.py - Whole-system properties over enumerated suites.

The full-scale suites are marked slow; run them with `pytest -m slow`.
Each property also runs on a small suite by default.
"""

from itertools import islice, product

import pytest

from stlc_interp.bidir import check_nf
from stlc_interp.enumeration import TermEnumerator, enum_nfs
from stlc_interp.interpolation import Side, certify, make_partition, verify_certificate
from stlc_interp.reduction import joinable, normalize, reachable_normal_forms, reducts
from stlc_interp.subst import Substitution, apply_subst, check_sub_typing, one, up, weaken, wk
from stlc_interp.syntax import (
    EMPTY,
    UNIT,
    Arrow,
    Base,
    Language,
    Prod,
    Sum,
    Var,
    constants_of,
    extend,
)
from stlc_interp.typecheck import infer

P = Base("P")
Q = Base("Q")

LANG = Language.from_bases({"P", "Q"})
ENTRY_TYPES = [P, Q, UNIT, EMPTY, Prod(P, Q), Sum(P, Q), Arrow(P, Q)]
CUTS = [P, Q, UNIT]

SMALL = dict(entries=[P, Sum(P, Q)], targets=[P, Arrow(P, P)], max_length=2, size=4, cut_types=[P, Q])
FULL = dict(entries=ENTRY_TYPES, targets=ENTRY_TYPES, max_length=2, size=7, cut_types=CUTS)
FULL_NF_SIZE = 6


def contexts(entries, max_length):
    for length in range(max_length + 1):
        yield from product(entries, repeat=length)


def collect(entries, targets, max_length, size, cut_types):
    """
    (ctx, term, type, size) for every enumerated term.

    One enumerator serves every context and target so that shared
    subterm tables are built once.
    """
    enumerator = TermEnumerator(LANG, tuple(cut_types))
    found = []
    for ctx in contexts(entries, max_length):
        for ty in targets:
            seen = set()
            for n in range(1, size + 1):
                for t in enumerator.exact(ctx, ty, n):
                    if t not in seen:
                        seen.add(t)
                        found.append((ctx, t, ty, n))
    return found


def normal_forms(entries, max_size):
    return [
        (ctx, t, ty, n)
        for ctx, t, ty, n in entries
        if n <= max_size and check_nf(LANG, ctx, t, ty)
    ]


@pytest.fixture(scope="module")
def small_suite():
    return collect(**SMALL)


@pytest.fixture(scope="module")
def small_nfs(small_suite):
    return normal_forms(small_suite, SMALL["size"])


@pytest.fixture(scope="module")
def full_suite():
    return collect(**FULL)


@pytest.fixture(scope="module")
def full_nfs(full_suite):
    return normal_forms(full_suite, FULL_NF_SIZE)


def typed_substitutions(ctx):
    """(target, substitution) pairs, each typed from target into ctx."""
    yield extend(ctx, Q), wk()
    if not ctx:
        return
    *rest, last = ctx
    yield (*rest, Q, last), up(wk())
    enumerator = TermEnumerator(LANG, ())
    values = (v for n in range(1, 4) for v in enumerator.exact(tuple(rest), last, n))
    for v in islice(values, 2):
        yield tuple(rest), one(v)
    if len(ctx) == 2:
        yield (ctx[1], ctx[0]), Substitution((Var(1), Var(0)), 2)


def check_reduction_properties(ctx, t, ty):
    steps = reducts(t)
    assert (not steps) == check_nf(LANG, ctx, t, ty), t
    for _, reduct in steps:
        assert infer(LANG, ctx, reduct) == ty, (t, reduct)
    result = normalize(LANG, ctx, t)
    assert check_nf(LANG, ctx, result, ty)


def check_local_confluence(t):
    steps = [reduct for _, reduct in reducts(t)]
    for i, a in enumerate(steps):
        for b in steps[i + 1 :]:
            assert joinable(a, b, 20), (t, a, b)


def check_strategy_independence(ctx, t):
    assert reachable_normal_forms(t) == {normalize(LANG, ctx, t)}, t


def check_weakening(ctx, t, ty):
    for extra in (Q, UNIT):
        assert infer(LANG, extend(ctx, extra), weaken(t)) == ty, (t, extra)


def check_substitution_typing(ctx, t, ty):
    for target, s in typed_substitutions(ctx):
        assert check_sub_typing(LANG, target, s, ctx), (target, s, ctx)
        assert infer(LANG, target, apply_subst(s, t)) == ty, (t, s)


def check_round_trip(ctx, t, ty):
    for tags in product("st", repeat=len(ctx)):
        cert = certify(LANG, make_partition(ctx, "".join(tags)), t, ty)
        report = verify_certificate(cert)
        assert report.passed, (t, "".join(tags), report.failed)
        assert normalize(LANG, ctx, cert.composite) == t


class TestSmallSuite:
    """Every property on a small suite."""

    def test_progress_preservation_normalization(self, small_suite):
        """Verify that stuck terms are normal and reducts keep their type."""
        for ctx, t, ty, _ in small_suite:
            check_reduction_properties(ctx, t, ty)

    def test_local_confluence(self, small_suite):
        """Verify that every pair of one-step reducts joins."""
        for _, t, _, _ in small_suite:
            check_local_confluence(t)

    def test_strategy_independence(self, small_suite):
        """Verify that every reduction path ends at the normalizer's result."""
        for ctx, t, _, _ in small_suite:
            check_strategy_independence(ctx, t)

    def test_weakening(self, small_suite):
        """Verify that weakening keeps the inferred type."""
        for ctx, t, ty, _ in small_suite:
            check_weakening(ctx, t, ty)

    def test_substitution_typing(self, small_suite):
        """Verify that typed substitutions keep the inferred type."""
        for ctx, t, ty, _ in small_suite:
            check_substitution_typing(ctx, t, ty)

    def test_interpolation_round_trip(self, small_nfs):
        """Verify that every certificate checks and composes back."""
        for ctx, t, ty, _ in small_nfs:
            check_round_trip(ctx, t, ty)


@pytest.mark.slow
class TestFullSuite:
    """Contexts of length <= 2 over seven entry types."""

    def test_progress_preservation_normalization(self, full_suite):
        """Verify that stuck terms are normal and reducts keep their type."""
        for ctx, t, ty, _ in full_suite:
            check_reduction_properties(ctx, t, ty)

    def test_local_confluence(self, full_suite):
        """Verify that every pair of one-step reducts joins."""
        for _, t, _, _ in full_suite:
            check_local_confluence(t)

    def test_strategy_independence(self, full_suite):
        """Verify that every reduction path ends at the normalizer's result."""
        for ctx, t, _, n in full_suite:
            if n <= FULL_NF_SIZE:
                check_strategy_independence(ctx, t)

    def test_weakening(self, full_suite):
        """Verify that weakening keeps the inferred type."""
        for ctx, t, ty, _ in full_suite:
            check_weakening(ctx, t, ty)

    def test_substitution_typing(self, full_suite):
        """Verify that typed substitutions keep the inferred type."""
        for ctx, t, ty, n in full_suite:
            if n <= FULL_NF_SIZE:
                check_substitution_typing(ctx, t, ty)

    def test_interpolation_round_trip(self, full_nfs):
        """Verify that every certificate checks and composes back."""
        for ctx, t, ty, _ in full_nfs:
            check_round_trip(ctx, t, ty)


@pytest.mark.slow
def test_constants_stay_on_their_side():
    """Verify that each interpolant mentions only its own side's constants."""
    lang = Language(base_types=frozenset({"P", "Q"}), constants={"c": P, "d": Q})
    const_tags = {"c": Side.SOURCE, "d": Side.TARGET}
    checked = 0
    for ty in [P, Q, Prod(P, Q), Arrow(Q, P)]:
        for t in enum_nfs(lang, (), ty, 5, [P, Q]):
            if constants_of(t) != {"c", "d"}:
                continue
            cert = certify(lang, make_partition((), "", const_tags), t, ty)
            assert verify_certificate(cert).passed, t
            assert constants_of(cert.l) <= {"c"}
            assert constants_of(cert.r) <= {"d"}
            checked += 1
    assert checked > 0
