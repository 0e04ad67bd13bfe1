"""Satisfiability-preserving clause expansion.

A clause extended by every sign pattern over a set of extra variables is
satisfied by exactly the same assignments as the original clause, so
replacing each clause of a k-interval ordering by its expansion block over
its needed variables yields an interval CNF with an interval ordering and
an identical model set.
"""
from __future__ import annotations

from itertools import product
from typing import Iterable

from .errors import OverlapError
from .formula import Clause, ClsElem, Formula, Literal, MixedOrdering, VarElem
from .ordering import needed_sets


def expand_clause(clause: Clause, extras: Iterable[int]) -> list[Clause]:
    """One clause per sign pattern over `extras`, negated-first lexicographic.

    Expanded clauses keep the parent's id and weight for traceability; the
    weight copy is not meaningful for MaxSAT (a falsifying assignment
    misses exactly one block member, not all of them).
    """
    extra_vars = sorted(set(extras))
    if set(extra_vars) & clause.vars:
        raise OverlapError(
            f"extras {sorted(set(extra_vars) & clause.vars)} already in clause {clause.id}")
    out = []
    for signs in product((True, False), repeat=len(extra_vars)):
        lits = set(clause.literals)
        lits.update(Literal(v, neg) for v, neg in zip(extra_vars, signs))
        out.append(Clause(clause.id, frozenset(lits), clause.weight))
    return out


def _expand(formula: Formula, pi: MixedOrdering):
    needed = needed_sets(formula, pi)
    # new ids are parent-major: each original clause owns a consecutive id
    # block, so a width-0 expansion is the identity
    blocks: dict[int, list[Clause]] = {}
    mapping: dict[int, list[int]] = {}
    clauses: list[Clause] = []
    next_id = 1
    for c in formula.clauses:
        block = []
        ids = []
        for e in expand_clause(c, needed[c.id]):
            block.append(Clause(next_id, e.literals, e.weight))
            ids.append(next_id)
            next_id += 1
        blocks[c.id] = block
        mapping[c.id] = ids
        clauses.extend(block)
    elements = []
    for e in pi.elements:
        if isinstance(e, VarElem):
            elements.append(e)
        else:
            elements.extend(ClsElem(c.id) for c in blocks[e.cls])
    return Formula(formula.n, tuple(clauses)), MixedOrdering(tuple(elements)), mapping


def expand_to_interval(formula: Formula, pi: MixedOrdering) -> tuple[Formula, MixedOrdering]:
    """Expand every clause over its needed variables.

    The result is an interval CNF formula with an interval ordering; clause
    ids are renumbered in ordering position. Total clause count is the sum
    of 2^|needed(c)| over clauses.
    """
    new_formula, new_pi, _ = _expand(formula, pi)
    return new_formula, new_pi


def expand_with_mapping(formula: Formula, pi: MixedOrdering
                        ) -> tuple[Formula, MixedOrdering, dict[int, list[int]]]:
    """expand_to_interval plus {original clause id: expanded clause ids}."""
    return _expand(formula, pi)
