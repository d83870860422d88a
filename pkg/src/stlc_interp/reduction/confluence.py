"""
confluence.py - Bounded joinability and exhaustive path exploration.

These are desk-scale checks: they search the reduction graph
breadth-first and give up at a bound.
"""

import logging
from collections import deque
from functools import lru_cache
from itertools import combinations

from stlc_interp.config import DEFAULT_EXPLORATION_LIMIT, SUCCESSOR_CACHE_SIZE
from stlc_interp.reduction.rules import iter_reducts
from stlc_interp.syntax.terms import Term

logger = logging.getLogger(__name__)


@lru_cache(maxsize=SUCCESSOR_CACHE_SIZE)
def _successors(t: Term) -> frozenset[Term]:
    return frozenset(result for _, result in iter_reducts(t))


def joinable(t: Term, u: Term, bound: int) -> bool:
    """
    True iff t and u have a common reduct within `bound` steps each.

    Both reduction graphs are expanded one level at a time; after each
    level the two visited sets are intersected.
    """
    seen_t: set[Term] = {t}
    seen_u: set[Term] = {u}
    frontier_t, frontier_u = {t}, {u}
    if seen_t & seen_u:
        return True
    for _ in range(bound):
        frontier_t = {r for s in frontier_t for r in _successors(s)} - seen_t
        seen_t |= frontier_t
        if seen_t & seen_u:
            return True
        frontier_u = {r for s in frontier_u for r in _successors(s)} - seen_u
        seen_u |= frontier_u
        if seen_t & seen_u:
            return True
        if not frontier_t and not frontier_u:
            break
    return False


def critical_pairs(t: Term) -> list[tuple[Term, Term]]:
    """All pairs of distinct one-step reducts of t."""
    results = sorted(set(_successors(t)), key=repr)
    return list(combinations(results, 2))


def reachable_normal_forms(t: Term, limit: int = DEFAULT_EXPLORATION_LIMIT) -> set[Term] | None:
    """
    Every normal form reachable from t along any reduction path.

    Returns None when more than `limit` distinct terms would need to be
    visited.
    """
    seen: set[Term] = {t}
    queue: deque[Term] = deque([t])
    normal_forms: set[Term] = set()
    while queue:
        current = queue.popleft()
        successors = _successors(current)
        if not successors:
            normal_forms.add(current)
            continue
        for result in successors:
            if result not in seen:
                if len(seen) >= limit:
                    logger.debug("exploration limit %d reached", limit)
                    return None
                seen.add(result)
                queue.append(result)
    return normal_forms
