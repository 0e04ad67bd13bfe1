"""Shared random-instance factories and independent re-implementations
used as oracles. Nothing here imports the code paths it is meant to check
beyond the public data model."""
from __future__ import annotations

import random

from intervalsat import (
    ClsElem,
    Formula,
    MixedOrdering,
    SideOrders,
    VarElem,
    build_formula,
)


def random_formula(rng: random.Random, n_max: int = 14, m_max: int = 18,
                   width_max: int = 4, weighted: bool = False,
                   n_min: int = 1, m_min: int = 1) -> Formula:
    n = rng.randint(n_min, n_max)
    m = rng.randint(m_min, m_max)
    clause_lits = []
    for _ in range(m):
        width = rng.randint(1, min(width_max, n))
        vs = rng.sample(range(1, n + 1), width)
        clause_lits.append([v if rng.random() < 0.5 else -v for v in vs])
    weights = [rng.randint(1, 10) for _ in range(m)] if weighted else None
    return build_formula(n, clause_lits, weights)


def random_ordering(rng: random.Random, formula: Formula) -> MixedOrdering:
    elements = [VarElem(x) for x in range(1, formula.n + 1)]
    elements += [ClsElem(c) for c in range(1, formula.m + 1)]
    rng.shuffle(elements)
    return MixedOrdering(tuple(elements))


def random_side_orders(rng: random.Random, formula: Formula) -> SideOrders:
    vo = list(range(1, formula.n + 1))
    co = list(range(1, formula.m + 1))
    rng.shuffle(vo)
    rng.shuffle(co)
    return SideOrders(tuple(vo), tuple(co))


def needed_rescan(formula: Formula, pi: MixedOrdering, cid: int) -> set[int]:
    """Literal re-scan of the two k-interval conditions, quantifier by
    quantifier, with no shared index structures."""
    seq = list(pi.elements)
    cpos = seq.index(ClsElem(cid))
    cvars = formula.clause(cid).vars
    needed = set()
    for x in range(1, formula.n + 1):
        if x in cvars:
            continue
        xpos = seq.index(VarElem(x))
        cond1 = any(
            seq.index(VarElem(x2)) < xpos < cpos
            for x2 in cvars
        )
        cond2 = any(
            x in c2.vars and seq.index(ClsElem(c2.id)) < cpos < xpos
            for c2 in formula.clauses
        )
        if cond1 or cond2:
            needed.add(x)
    return needed


def rescan_width(formula: Formula, pi: MixedOrdering) -> int:
    return max((len(needed_rescan(formula, pi, c.id)) for c in formula.clauses),
               default=0)
