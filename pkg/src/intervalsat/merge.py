"""Greedy merging of separate variable and clause orders into a minimum
k-interval ordering.

The scan processes clauses by decreasing clause-order rank and slides an
insertion point t downward through the variable order, placing each clause
at the highest position (below the previously placed clause) where the
number of edges the ordering would force onto it stays within the budget q.
That count is available in O(1) from running totals:

    edges_added = livevar + max(t - low, 0) - size

where `livevar` counts variables ranked above t that still appear in an
unplaced clause, `low` is the number of variables ranked strictly below the
clause's lowest variable, and `size` is the clause's variable count. The
max() clamp matters when the clause is probed below its own lowest
variable: there the Cond1 term contributes nothing, and letting it go
negative would accept positions that actually exceed the budget.

The minimum k is found by testing q=0, then galloping q = 1, 2, 4, ... to
the first success and binary searching the last doubling step.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import EmptyClauseInMerge
from .formula import ClsElem, Formula, MixedOrdering, SideOrders, VarElem


def edges_added_scan(livevar: int, t: int, low: int, size: int) -> int:
    """Edges forced onto a clause inserted immediately after variable rank t.

    `low` counts variables ranked strictly below all of the clause's
    variables (the 1-based rank of its lowest variable, minus one). Lower
    clause-order ranks are assumed to end up below the insertion point and
    higher ranks above, and `livevar` must count the clause's own
    above-t variables as live.
    """
    return livevar + max(t - low, 0) - size


@dataclass
class MergeScanState:
    """Mutable bookkeeping for one fixed-q scan."""

    t: int                      # current insertion rank, 0 = before all variables
    live: list[int]             # live[r] = unplaced clauses containing var rank r (1-based)
    livevar: int                # |{r > t : live[r] > 0}|
    slots: list[list[int]]      # slots[r] = clause ids placed right after var rank r


@dataclass(frozen=True)
class InsertionRecord:
    clause: int
    slot: int           # variable rank the clause was placed after
    edges_added: int    # scan value at insertion time


@dataclass(frozen=True)
class MergeResult:
    k: int
    ordering: MixedOrdering


def _prepare(formula: Formula, so: SideOrders):
    so.validate_for(formula)
    vrank = {v: r + 1 for r, v in enumerate(so.var_order)}
    low: dict[int, int] = {}
    size: dict[int, int] = {}
    for c in formula.clauses:
        if not c.vars:
            raise EmptyClauseInMerge(f"clause {c.id} is empty")
        low[c.id] = min(vrank[x] for x in c.vars) - 1
        size[c.id] = len(c.vars)
    return vrank, low, size


def _scan(formula: Formula, so: SideOrders, q: int):
    """One fixed-q pass; returns (ordering or None, insertion records)."""
    n = formula.n
    vrank, low, size = _prepare(formula, so)
    state = MergeScanState(
        t=n,
        live=[0] * (n + 1),
        livevar=0,
        slots=[[] for _ in range(n + 1)],
    )
    for c in formula.clauses:
        for x in c.vars:
            state.live[vrank[x]] += 1
    records: list[InsertionRecord] = []
    for i in range(formula.m, 0, -1):
        cid = so.cla_order[i - 1]
        while True:
            ea = edges_added_scan(state.livevar, state.t, low[cid], size[cid])
            if ea <= q:
                state.slots[state.t].insert(0, cid)
                records.append(InsertionRecord(cid, state.t, ea))
                for x in formula.clause(cid).vars:
                    r = vrank[x]
                    state.live[r] -= 1
                    if state.live[r] == 0 and r > state.t:
                        state.livevar -= 1
                break
            if state.t == 0:
                return None, records
            # the variable at the old t moves above the insertion point
            if state.live[state.t] > 0:
                state.livevar += 1
            state.t -= 1
    elements: list[VarElem | ClsElem] = []
    for r in range(n + 1):
        if r >= 1:
            elements.append(VarElem(so.var_order[r - 1]))
        elements.extend(ClsElem(cid) for cid in state.slots[r])
    return MixedOrdering(tuple(elements)), records


def feasible_merge(formula: Formula, so: SideOrders, q: int) -> Optional[MixedOrdering]:
    """Greedy merge compatible with both side orders, or None when no merge
    keeps every clause within q added edges."""
    ordering, _ = _scan(formula, so, q)
    return ordering


def feasible_merge_with_records(formula: Formula, so: SideOrders, q: int
                                ) -> tuple[Optional[MixedOrdering], list[InsertionRecord]]:
    """feasible_merge plus the per-clause scan values at insertion time."""
    return _scan(formula, so, q)


def min_merge_k(formula: Formula, so: SideOrders) -> MergeResult:
    """Minimum k over all merges compatible with the side orders, with a
    witness ordering achieving it."""
    ordering = feasible_merge(formula, so, 0)
    if ordering is not None:
        return MergeResult(0, ordering)
    q = 1
    while True:
        ordering = feasible_merge(formula, so, q)
        if ordering is not None:
            break
        q *= 2
    lo, hi = q // 2 + 1, q
    best = ordering
    while lo < hi:
        mid = (lo + hi) // 2
        candidate = feasible_merge(formula, so, mid)
        if candidate is not None:
            hi = mid
            best = candidate
        else:
            lo = mid + 1
    return MergeResult(hi, best)
