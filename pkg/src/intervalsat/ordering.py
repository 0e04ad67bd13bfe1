"""Interval and k-interval ordering checks, and merge obstruction detection.

An interval ordering is a total order over variables and clauses where, for
every variable x appearing in clause C: (1) every variable between x and C
also appears in C, and (2) every clause between C and x also contains x.
A k-interval ordering relaxes this: each clause C may have up to k
"needed" variables x not in C such that either some x' in C has
x' < x < C (Cond1) or x appears in some clause C' with C' < C < x (Cond2).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import UnknownClause
from .formula import Formula, MixedOrdering, SideOrders


class Cond(Enum):
    COND1 = "Cond1"
    COND2 = "Cond2"


@dataclass(frozen=True)
class Violation:
    clause: int
    var: int
    condition: Cond


@dataclass(frozen=True)
class OrderingVerdict:
    ok: bool
    violation: Optional[Violation] = None


@dataclass(frozen=True)
class Obstruction:
    """A forbidden incidence pattern across the two side orders.

    LeftPattern witnesses: variables x < z and clauses A < C with x in C,
    z in A, z not in C. RightPattern witnesses: variables x < y < z and
    clauses A < B < C with z in A, z not in B, x in C, y not in C.
    Fields not used by a pattern are None.
    """

    kind: str  # "LeftPattern" | "RightPattern"
    x: int
    z: int
    cla_a: int
    cla_c: int
    y: Optional[int] = None
    cla_b: Optional[int] = None


def _position_index(formula: Formula, pi: MixedOrdering):
    pi.validate_for(formula)
    var_pos, cls_pos = pi.positions()
    # earliest clause position containing each variable, None when unused
    min_cla_pos: dict[int, Optional[int]] = {x: None for x in range(1, formula.n + 1)}
    for c in formula.clauses:
        cp = cls_pos[c.id]
        for x in c.vars:
            if min_cla_pos[x] is None or cp < min_cla_pos[x]:
                min_cla_pos[x] = cp
    return var_pos, cls_pos, min_cla_pos


def edges_needed(formula: Formula, pi: MixedOrdering, cid: int) -> frozenset[int]:
    """Variables the ordering forces onto clause `cid` (Cond1 or Cond2)."""
    if not 1 <= cid <= formula.m:
        raise UnknownClause(f"clause {cid} not in 1..{formula.m}")
    var_pos, cls_pos, min_cla_pos = _position_index(formula, pi)
    return _needed_one(formula, cid, var_pos, cls_pos, min_cla_pos)


def _needed_one(formula, cid, var_pos, cls_pos, min_cla_pos) -> frozenset[int]:
    cvars = formula.clause(cid).vars
    cpos = cls_pos[cid]
    min_vp = min((var_pos[x] for x in cvars), default=None)
    needed = set()
    for x in range(1, formula.n + 1):
        if x in cvars:
            continue
        xp = var_pos[x]
        if min_vp is not None and min_vp < xp < cpos:
            needed.add(x)  # Cond1
        elif xp > cpos and min_cla_pos[x] is not None and min_cla_pos[x] < cpos:
            needed.add(x)  # Cond2
    return frozenset(needed)


def needed_sets(formula: Formula, pi: MixedOrdering) -> dict[int, frozenset[int]]:
    """edges_needed for every clause, sharing one position index."""
    var_pos, cls_pos, min_cla_pos = _position_index(formula, pi)
    return {c.id: _needed_one(formula, c.id, var_pos, cls_pos, min_cla_pos)
            for c in formula.clauses}


def ordering_width_k(formula: Formula, pi: MixedOrdering) -> int:
    """max over clauses of |edges_needed|; 0 iff the ordering is interval."""
    return max((len(s) for s in needed_sets(formula, pi).values()), default=0)


def verify_interval_ordering(formula: Formula, pi: MixedOrdering) -> OrderingVerdict:
    """Check both interval-ordering conditions for every incidence.

    On failure reports the first violation ordered by (position of the
    clause that lacks the variable, position of that variable). Cond1
    offenders sit before their clause, Cond2 offenders after, so for one
    clause Cond1 violations sort first.
    """
    var_pos, cls_pos, min_cla_pos = _position_index(formula, pi)
    for cid in sorted(range(1, formula.m + 1), key=lambda c: cls_pos[c]):
        needed = _needed_one(formula, cid, var_pos, cls_pos, min_cla_pos)
        if not needed:
            continue
        x = min(needed, key=lambda v: var_pos[v])
        cond = Cond.COND1 if var_pos[x] < cls_pos[cid] else Cond.COND2
        return OrderingVerdict(False, Violation(cid, x, cond))
    return OrderingVerdict(True)


def find_obstruction(formula: Formula, so: SideOrders) -> Optional[Obstruction]:
    """Detect a pattern making a 0-interval merge of the side orders impossible.

    Left patterns are searched before right patterns; within a pattern the
    scan is by clause-order position, then variable-order position, so the
    returned witness is deterministic.
    """
    so.validate_for(formula)
    n, m = formula.n, formula.m
    vrank = {v: r for r, v in enumerate(so.var_order)}
    crank = {c: r for r, c in enumerate(so.cla_order)}

    min_var_rank: dict[int, Optional[int]] = {}   # clause -> lowest var rank in it
    arg_min_var: dict[int, int] = {}
    for c in formula.clauses:
        ranked = sorted(c.vars, key=lambda x: vrank[x])
        min_var_rank[c.id] = vrank[ranked[0]] if ranked else None
        if ranked:
            arg_min_var[c.id] = ranked[0]
    min_cla_rank: dict[int, Optional[int]] = {x: None for x in range(1, n + 1)}
    arg_min_cla: dict[int, int] = {}
    for c in formula.clauses:
        for x in c.vars:
            if min_cla_rank[x] is None or crank[c.id] < min_cla_rank[x]:
                min_cla_rank[x] = crank[c.id]
                arg_min_cla[x] = c.id

    # LeftPattern: x <v z, A <c C, x in C, z in A, z not in C.
    for cc in so.cla_order:
        mv = min_var_rank[cc]
        if mv is None:
            continue
        cvars = formula.clause(cc).vars
        for z in so.var_order:
            if z in cvars or vrank[z] <= mv:
                continue
            mc = min_cla_rank[z]
            if mc is not None and mc < crank[cc]:
                return Obstruction("LeftPattern", x=arg_min_var[cc], z=z,
                                   cla_a=arg_min_cla[z], cla_c=cc)

    # RightPattern: x <v y <v z, A <c B <c C, z in A, z not in B, x in C, y not in C.
    # ebp[z] = earliest clause rank B with z not in B and some A < B containing z.
    ebp: dict[int, Optional[int]] = {}
    ebp_arg: dict[int, int] = {}
    for z in range(1, n + 1):
        ebp[z] = None
        mc = min_cla_rank[z]
        if mc is None:
            continue
        for r in range(mc + 1, m):
            b = so.cla_order[r]
            if z not in formula.clause(b).vars:
                ebp[z] = r
                ebp_arg[z] = b
                break
    # min_ebp_from[r] = best ebp over variables of rank >= r, with its variable
    min_ebp_from: list[tuple[Optional[int], Optional[int]]] = [(None, None)] * (n + 1)
    for r in range(n - 1, -1, -1):
        z = so.var_order[r]
        best = min_ebp_from[r + 1]
        if ebp[z] is not None and (best[0] is None or ebp[z] < best[0]):
            best = (ebp[z], z)
        min_ebp_from[r] = best

    for cc in so.cla_order:
        mv = min_var_rank[cc]
        if mv is None:
            continue
        cvars = formula.clause(cc).vars
        for y in so.var_order:
            if y in cvars or vrank[y] <= mv:
                continue
            best, z = min_ebp_from[vrank[y] + 1]
            if best is not None and best < crank[cc]:
                return Obstruction("RightPattern", x=arg_min_var[cc], y=y, z=z,
                                   cla_a=arg_min_cla[z], cla_b=ebp_arg[z], cla_c=cc)
    return None
