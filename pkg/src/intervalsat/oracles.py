"""Brute-force reference implementations.

Everything here is a ground-truth by exhaustive enumeration with loud
caps; nothing is shared with the algorithms it is used to check.
"""
from __future__ import annotations

from itertools import combinations
from math import comb

import numpy as np

from .errors import TooManyInterleavings, TooManyVariables
from .formula import Assignment, ClsElem, Formula, MixedOrdering, SideOrders, VarElem
from .ordering import ordering_width_k

BRUTE_VAR_CAP = 20
BRUTE_INTERLEAVING_CAP = 10 ** 6


def _clause_masks(formula: Formula):
    """(positive, negative) variable bitmasks per clause; var i is bit n-i,
    so ascending mask value is ascending lexicographic assignment order
    with False < True and variable 1 compared first."""
    n = formula.n
    pos = []
    neg = []
    for c in formula.clauses:
        p = q = 0
        for l in c.literals:
            bit = 1 << (n - l.var)
            if l.negated:
                q |= bit
            else:
                p |= bit
        pos.append(p)
        neg.append(q)
    return pos, neg


def _sat_table(formula: Formula) -> np.ndarray:
    """Boolean vector over all 2^n assignments: formula satisfied or not."""
    n = formula.n
    pos, neg = _clause_masks(formula)
    assigns = np.arange(1 << n, dtype=np.uint64)
    full = np.uint64((1 << n) - 1)
    sat = np.ones(1 << n, dtype=bool)
    for p, q in zip(pos, neg):
        sat &= ((assigns & np.uint64(p)) != 0) | (((assigns ^ full) & np.uint64(q)) != 0)
    return sat


def _mask_to_assignment(mask: int, n: int) -> Assignment:
    return {x: bool((mask >> (n - x)) & 1) for x in range(1, n + 1)}


def brute_count(formula: Formula, cap: int = BRUTE_VAR_CAP) -> int:
    """Model count by full enumeration."""
    if formula.n > cap:
        raise TooManyVariables(f"n={formula.n} exceeds enumeration cap {cap}")
    return int(_sat_table(formula).sum())


def brute_max_weight(formula: Formula, cap: int = BRUTE_VAR_CAP) -> tuple[int, Assignment]:
    """Exact MaxSAT optimum by full enumeration.

    Ties go to the lexicographically smallest assignment (False before
    True, variable 1 first).
    """
    if formula.n > cap:
        raise TooManyVariables(f"n={formula.n} exceeds enumeration cap {cap}")
    n = formula.n
    pos, neg = _clause_masks(formula)
    assigns = np.arange(1 << n, dtype=np.uint64)
    full = np.uint64((1 << n) - 1)
    total = np.zeros(1 << n, dtype=np.int64)
    for c, p, q in zip(formula.clauses, pos, neg):
        hit = ((assigns & np.uint64(p)) != 0) | (((assigns ^ full) & np.uint64(q)) != 0)
        total += np.int64(c.weight) * hit
    best = int(np.argmax(total))  # first maximum = lexicographically smallest
    return int(total[best]), _mask_to_assignment(best, n)


def brute_min_merge_k(formula: Formula, so: SideOrders,
                      cap: int = BRUTE_INTERLEAVING_CAP) -> int:
    """Minimum ordering width over all interleavings of the two side orders."""
    so.validate_for(formula)
    n, m = formula.n, formula.m
    if comb(n + m, m) > cap:
        raise TooManyInterleavings(
            f"C({n + m},{m}) = {comb(n + m, m)} exceeds cap {cap}")
    best = None
    for cpos in combinations(range(n + m), m):
        cset = set(cpos)
        elements = []
        vi = ci = 0
        for p in range(n + m):
            if p in cset:
                elements.append(ClsElem(so.cla_order[ci]))
                ci += 1
            else:
                elements.append(VarElem(so.var_order[vi]))
                vi += 1
        w = ordering_width_k(formula, MixedOrdering(tuple(elements)))
        if best is None or w < best:
            best = w
            if best == 0:
                break
    return 0 if best is None else best
