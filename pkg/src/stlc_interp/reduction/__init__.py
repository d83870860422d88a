"""
reduction - β reduction, commuting conversions and normalization.
"""

from stlc_interp.reduction.rules import (
    Redex,
    Rule,
    contract,
    iter_reducts,
    redexes,
    reducts,
    retype,
    root_reducts,
    shift_elim,
)
from stlc_interp.reduction.normalize import (
    Normalization,
    TraceStep,
    first_redex,
    normalize,
    normalize_traced,
    replay,
    step,
)
from stlc_interp.reduction.confluence import (
    critical_pairs,
    joinable,
    reachable_normal_forms,
)

__all__ = [
    "Redex",
    "Rule",
    "contract",
    "iter_reducts",
    "redexes",
    "reducts",
    "retype",
    "root_reducts",
    "shift_elim",
    "Normalization",
    "TraceStep",
    "first_redex",
    "normalize",
    "normalize_traced",
    "replay",
    "step",
    "critical_pairs",
    "joinable",
    "reachable_normal_forms",
]
