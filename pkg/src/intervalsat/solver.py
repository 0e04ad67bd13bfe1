"""Exact #SAT and weighted MaxSAT by dynamic programming over a mixed
ordering, plus the cut-subformula machinery used to measure orderings.

The sweep walks the ordering left to right keeping a sparse map from
states (U, S) to an aggregate, where U holds already-seen clauses that are
unsatisfied but still have variables ahead, and S holds not-yet-seen
clauses already satisfied by the prefix assignment. Both sets are stored
as clause-id bitmasks. Two prefix assignments with equal (U, S) behave
identically from the cut onward, so counting sums their model counts and
maximization keeps the better weight.

Transitions:
  * clause arrives: if in S, drop it from S (MaxSAT: collect its weight);
    else if none of its variables lie ahead it is decided false (counting
    drops the state, MaxSAT keeps it with nothing collected); else it
    enters U.
  * variable arrives: branch on both truth values; satisfied clauses leave
    U (MaxSAT: collect weights) and satisfied unseen clauses enter S; any
    clause left in U whose last variable this was is decided false
    (counting drops the state, MaxSAT removes it from U).

The number of distinct S values live at cut i can never exceed the
ps-value of the suffix-side cut formula at i, which is what ties the
sweep's width to the ps-width of the ordering.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal as TypingLiteral, Optional

import numpy as np

from .errors import CutOutOfRange, TooManyVariables
from .formula import (
    Assignment,
    Clause,
    ClsElem,
    Formula,
    MixedOrdering,
    VarElem,
)

PS_VALUE_VAR_CAP = 24

Fragment = tuple[Clause, ...]


@dataclass(frozen=True)
class CutFormulas:
    """The two subformulas crossing cut i of an ordering.

    f1: clauses among the first i elements, restricted to variables after
    the cut. f2: clauses after the cut, restricted to variables among the
    first i elements. Clauses whose restriction is empty are retained as
    empty (unsatisfiable) clauses.
    """

    i: int
    f1: Fragment
    f2: Fragment


def cut_formulas(formula: Formula, pi: MixedOrdering, i: int) -> CutFormulas:
    pi.validate_for(formula)
    total = formula.n + formula.m
    if not 0 <= i <= total:
        raise CutOutOfRange(f"cut {i} not in 0..{total}")
    var_pos, cls_pos = pi.positions()
    prefix_vars = {x for x, p in var_pos.items() if p < i}
    f1 = []
    f2 = []
    for e in pi.elements:
        if isinstance(e, VarElem):
            continue
        c = formula.clause(e.cls)
        if cls_pos[c.id] < i:
            f1.append(Clause(c.id, frozenset(
                l for l in c.literals if l.var not in prefix_vars), c.weight))
        else:
            f2.append(Clause(c.id, frozenset(
                l for l in c.literals if l.var in prefix_vars), c.weight))
    return CutFormulas(i, tuple(f1), tuple(f2))


def ps_value(fragment: Iterable[Clause], cap: int = PS_VALUE_VAR_CAP) -> int:
    """Number of distinct satisfied-clause sets over all assignments of the
    fragment's variables, by full enumeration."""
    clauses = list(fragment)
    variables = sorted({v for c in clauses for v in c.vars})
    if len(variables) > cap:
        raise TooManyVariables(
            f"fragment has {len(variables)} variables, cap is {cap}")
    if not clauses:
        return 1
    index = {v: b for b, v in enumerate(variables)}
    pos_masks = []
    neg_masks = []
    for c in clauses:
        p = q = 0
        for l in c.literals:
            if l.negated:
                q |= 1 << index[l.var]
            else:
                p |= 1 << index[l.var]
        pos_masks.append(p)
        neg_masks.append(q)
    nv = len(variables)
    if len(clauses) <= 63 and nv >= 10:
        assigns = np.arange(1 << nv, dtype=np.uint64)
        sat = np.zeros(1 << nv, dtype=np.uint64)
        full = np.uint64((1 << nv) - 1)
        for b, (p, q) in enumerate(zip(pos_masks, neg_masks)):
            hit = ((assigns & np.uint64(p)) != 0) | (((assigns ^ full) & np.uint64(q)) != 0)
            sat |= hit.astype(np.uint64) << np.uint64(b)
        return int(np.unique(sat).size)
    seen = set()
    full_mask = (1 << nv) - 1
    for a in range(1 << nv):
        inv = a ^ full_mask
        s = 0
        for b, (p, q) in enumerate(zip(pos_masks, neg_masks)):
            if (a & p) or (inv & q):
                s |= 1 << b
        seen.add(s)
    return len(seen)


def ps_profile(formula: Formula, pi: MixedOrdering,
               cap: int = PS_VALUE_VAR_CAP) -> list[tuple[int, int]]:
    """Per-cut (ps_value(f1(i)), ps_value(f2(i))) for i = 1..n+m."""
    out = []
    for i in range(1, formula.n + formula.m + 1):
        cf = cut_formulas(formula, pi, i)
        out.append((ps_value(cf.f1, cap), ps_value(cf.f2, cap)))
    return out


def ps_width(formula: Formula, pi: MixedOrdering, cap: int = PS_VALUE_VAR_CAP) -> int:
    """Maximum ps-value over the 2(n+m) cut subformulas of the ordering."""
    profile = ps_profile(formula, pi, cap)
    return max((max(a, b) for a, b in profile), default=1)


@dataclass(frozen=True)
class SolveReport:
    """Answer plus per-cut sweep diagnostics (cut i = after element i)."""

    mode: str
    answer: int
    witness: Optional[Assignment]
    live_states: tuple[int, ...]
    distinct_s: tuple[int, ...]

    @property
    def max_live_states(self) -> int:
        return max(self.live_states, default=1)


def _context(formula: Formula, pi: MixedOrdering):
    pi.validate_for(formula)
    var_pos, cls_pos = pi.positions()
    total = formula.n + formula.m
    sat_by_true: dict[int, int] = {x: 0 for x in range(1, formula.n + 1)}
    sat_by_false: dict[int, int] = {x: 0 for x in range(1, formula.n + 1)}
    last_var_pos: dict[int, int] = {}
    for c in formula.clauses:
        bit = 1 << (c.id - 1)
        for l in c.literals:
            if l.negated:
                sat_by_false[l.var] |= bit
            else:
                sat_by_true[l.var] |= bit
        positions = [var_pos[x] for x in c.vars]
        if positions:
            last_var_pos[c.id] = max(positions)
    dying = [0] * total
    for cid, p in last_var_pos.items():
        dying[p] |= 1 << (cid - 1)
    # clauses positioned strictly after p
    suffix = [0] * (total + 1)
    for p in range(total - 1, -1, -1):
        suffix[p] = suffix[p + 1]
        e = pi.elements[p]
        if isinstance(e, ClsElem):
            suffix[p] |= 1 << (e.cls - 1)
    suffix_after = [suffix[p + 1] for p in range(total)]
    return var_pos, cls_pos, sat_by_true, sat_by_false, last_var_pos, dying, suffix_after


def count_models(formula: Formula, pi: MixedOrdering) -> int:
    """Exact model count of the formula; the ordering affects cost only."""
    return _count_sweep(formula, pi).answer


def solve_detailed(formula: Formula, pi: MixedOrdering,
                   mode: TypingLiteral["count", "maxsat"] = "count") -> SolveReport:
    if mode == "count":
        return _count_sweep(formula, pi)
    if mode == "maxsat":
        return _maxsat_sweep(formula, pi)
    raise ValueError(f"unknown mode {mode!r}")


def _count_sweep(formula: Formula, pi: MixedOrdering) -> SolveReport:
    (var_pos, cls_pos, sat_by_true, sat_by_false,
     last_var_pos, dying, suffix_after) = _context(formula, pi)
    states: dict[tuple[int, int], int] = {(0, 0): 1}
    live_counts = []
    s_counts = []
    for p, e in enumerate(pi.elements):
        new: dict[tuple[int, int], int] = {}
        if isinstance(e, ClsElem):
            bit = 1 << (e.cls - 1)
            stays_open = last_var_pos.get(e.cls, -1) > p
            for (u, s), cnt in states.items():
                if s & bit:
                    key = (u, s & ~bit)
                elif stays_open:
                    key = (u | bit, s)
                else:
                    continue  # decided false
                new[key] = new.get(key, 0) + cnt
        else:
            die = dying[p]
            after = suffix_after[p]
            for sat in (sat_by_false[e.var], sat_by_true[e.var]):
                gain_s = sat & after
                for (u, s), cnt in states.items():
                    u1 = u & ~sat
                    if u1 & die:
                        continue  # some clause ran out of variables unsatisfied
                    key = (u1, s | gain_s)
                    new[key] = new.get(key, 0) + cnt
        states = new
        live_counts.append(len(states))
        s_counts.append(len({s for (_, s) in states}))
    assert all(key == (0, 0) for key in states)
    return SolveReport("count", sum(states.values()), None,
                       tuple(live_counts), tuple(s_counts))


def _maxsat_sweep(formula: Formula, pi: MixedOrdering) -> SolveReport:
    (var_pos, cls_pos, sat_by_true, sat_by_false,
     last_var_pos, dying, suffix_after) = _context(formula, pi)
    weights = {c.id: c.weight for c in formula.clauses}

    def mask_weight(mask: int) -> int:
        w = 0
        while mask:
            low = mask & -mask
            w += weights[low.bit_length()]
            mask ^= low
        return w

    states: dict[tuple[int, int], int] = {(0, 0): 0}
    history: list[dict[tuple[int, int], tuple[tuple[int, int], Optional[bool]]]] = []
    live_counts = []
    s_counts = []
    for p, e in enumerate(pi.elements):
        new: dict[tuple[int, int], int] = {}
        parents: dict[tuple[int, int], tuple[tuple[int, int], Optional[bool]]] = {}
        if isinstance(e, ClsElem):
            bit = 1 << (e.cls - 1)
            stays_open = last_var_pos.get(e.cls, -1) > p
            for (u, s), w in states.items():
                if s & bit:
                    key, w1 = (u, s & ~bit), w + weights[e.cls]
                elif stays_open:
                    key, w1 = (u | bit, s), w
                else:
                    key, w1 = (u, s), w  # unsatisfiable here; weight forfeited
                if key not in new or w1 > new[key]:
                    new[key] = w1
                    parents[key] = ((u, s), None)
        else:
            die = dying[p]
            after = suffix_after[p]
            branches = ((False, sat_by_false[e.var]), (True, sat_by_true[e.var]))
            for (u, s), w in states.items():
                for val, sat in branches:
                    w1 = w + mask_weight(u & sat)
                    u1 = u & ~sat & ~die
                    key = (u1, s | (sat & after))
                    if key not in new or w1 > new[key]:
                        new[key] = w1
                        parents[key] = ((u, s), val)
        states = new
        history.append(parents)
        live_counts.append(len(states))
        s_counts.append(len({s for (_, s) in states}))
    assert set(states) == {(0, 0)} or not states
    best = states.get((0, 0), 0)
    witness: Assignment = {}
    key = (0, 0)
    for p in range(len(pi.elements) - 1, -1, -1):
        parent, choice = history[p][key]
        e = pi.elements[p]
        if isinstance(e, VarElem):
            witness[e.var] = bool(choice)
        key = parent
    return SolveReport("maxsat", best, witness, tuple(live_counts), tuple(s_counts))


def max_weight(formula: Formula, pi: MixedOrdering) -> tuple[int, Assignment]:
    """Maximum total weight of simultaneously satisfiable clauses, with a
    witness assignment achieving it."""
    report = _maxsat_sweep(formula, pi)
    assert report.witness is not None
    return report.answer, report.witness
