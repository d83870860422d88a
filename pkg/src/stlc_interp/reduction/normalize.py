"""
normalize.py - Deterministic normalization with fuel and traces.

The strategy contracts the first redex in root-first, left-to-right
order. Well-typed terms always reach a normal form; running out of fuel
is an error, not a result.
"""

import logging
from collections import Counter
from dataclasses import dataclass

from stlc_interp.config import DEFAULT_FUEL
from stlc_interp.errors import FuelExhaustedError, TraceError
from stlc_interp.invariants import Invariants
from stlc_interp.metrics import EngineLogger
from stlc_interp.reduction.rules import Redex, contract, iter_reducts
from stlc_interp.syntax.context import Context
from stlc_interp.syntax.terms import Term
from stlc_interp.syntax.types import Language
from stlc_interp.typecheck import infer

logger = logging.getLogger(__name__)
_events = EngineLogger(__name__)


@dataclass(frozen=True, slots=True)
class TraceStep:
    """One contraction: the redex and the whole term it produced."""
    redex: Redex
    result: Term


@dataclass(frozen=True, slots=True)
class Normalization:
    term: Term
    trace: tuple[TraceStep, ...]

    @property
    def steps(self) -> int:
        return len(self.trace)


def first_redex(t: Term) -> tuple[Redex, Term] | None:
    """The redex the strategy contracts next, with its result."""
    return next(iter_reducts(t), None)


def step(t: Term) -> Term | None:
    """One deterministic step; None iff t has no reduct."""
    found = first_redex(t)
    return None if found is None else found[1]


def normalize_traced(
    lang: Language, ctx: Context, t: Term, fuel: int = DEFAULT_FUEL
) -> Normalization:
    """
    Normalize a well-typed term, recording every contraction.

    Raises:
        TypeCheckError: t is ill-typed
        FuelExhaustedError: no normal form within `fuel` steps
    """
    ty = infer(lang, ctx, t)
    trace: list[TraceStep] = []
    current = t
    while True:
        found = first_redex(current)
        if found is None:
            break
        if len(trace) >= fuel:
            _events.fuel_exhausted(fuel)
            raise FuelExhaustedError(fuel, t)
        redex, current = found
        trace.append(TraceStep(redex, current))
        logger.debug("step %d: %s at %s", len(trace), redex.rule.value, redex.path)

    Invariants.assert_type_preserved(lang, ctx, current, ty)
    Invariants.assert_normal_form(lang, ctx, current, ty)
    rules = Counter(s.redex.rule.value for s in trace)
    _events.normalization_completed(len(trace), dict(rules))
    return Normalization(current, tuple(trace))


def normalize(lang: Language, ctx: Context, t: Term, fuel: int = DEFAULT_FUEL) -> Term:
    """Normal form of a well-typed term (see normalize_traced)."""
    return normalize_traced(lang, ctx, t, fuel).term


def replay(start: Term, trace: tuple[TraceStep, ...] | list[TraceStep]) -> Term:
    """
    Re-contract every recorded redex and check each result.

    Returns the final term.

    Raises:
        TraceError: a step does not apply or produces a different term
    """
    current = start
    for number, recorded in enumerate(trace):
        result = contract(current, recorded.redex)
        if result is None:
            raise TraceError(
                f"{recorded.redex.rule.value} does not apply at {list(recorded.redex.path)}",
                step=number,
            )
        if result != recorded.result:
            raise TraceError("Contraction result differs from the recorded term", step=number)
        current = result
    return current
