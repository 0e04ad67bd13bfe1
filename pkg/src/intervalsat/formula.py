"""Core data model: CNF formulas, assignments, incidence bigraphs, orderings.

Variables and clauses are identified by 1-based integer ids. Clause ids
follow input order and never change; reorderings are expressed separately
(`SideOrders`, `MixedOrdering`). All types are immutable after construction
and safe to share across threads.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    OrderingMismatch,
    OutOfRangeLiteral,
    PartialAssignment,
    TautologicalClause,
    WeightCountMismatch,
)

# A total assignment is a plain dict {variable id: truth value}.
Assignment = dict[int, bool]


@dataclass(frozen=True, order=True)
class Literal:
    """A variable or its negation."""

    var: int
    negated: bool = False

    @staticmethod
    def from_int(lit: int) -> "Literal":
        """Build from DIMACS-style signed integer (nonzero)."""
        if lit == 0:
            raise ValueError("0 is not a literal")
        return Literal(abs(lit), lit < 0)

    def to_int(self) -> int:
        return -self.var if self.negated else self.var

    def __repr__(self) -> str:
        return f"{'-' if self.negated else ''}x{self.var}"


@dataclass(frozen=True)
class Clause:
    """A disjunction of literals with a nonnegative integer weight."""

    id: int
    literals: frozenset[Literal]
    weight: int = 1

    @property
    def vars(self) -> frozenset[int]:
        return frozenset(l.var for l in self.literals)

    def __repr__(self) -> str:
        lits = " ".join(repr(l) for l in sorted(self.literals))
        return f"C{self.id}({lits})"


@dataclass(frozen=True)
class Formula:
    """A CNF formula over variables 1..n with clauses ids 1..m in input order."""

    n: int
    clauses: tuple[Clause, ...]

    @property
    def m(self) -> int:
        return len(self.clauses)

    def clause(self, cid: int) -> Clause:
        return self.clauses[cid - 1]

    @property
    def total_weight(self) -> int:
        return sum(c.weight for c in self.clauses)


@dataclass(frozen=True)
class Bigraph:
    """A bipartite graph with clause-side and variable-side vertices."""

    cla_vertices: frozenset[int]
    var_vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]  # (clause id, variable id)


@dataclass(frozen=True)
class VarElem:
    var: int

    def __repr__(self) -> str:
        return f"x{self.var}"


@dataclass(frozen=True)
class ClsElem:
    cls: int

    def __repr__(self) -> str:
        return f"c{self.cls}"


Element = VarElem | ClsElem


@dataclass(frozen=True)
class MixedOrdering:
    """One total order over all variable and clause identities."""

    elements: tuple[Element, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def positions(self) -> tuple[dict[int, int], dict[int, int]]:
        """0-based positions as (variable id -> pos, clause id -> pos)."""
        var_pos: dict[int, int] = {}
        cls_pos: dict[int, int] = {}
        for p, e in enumerate(self.elements):
            if isinstance(e, VarElem):
                var_pos[e.var] = p
            else:
                cls_pos[e.cls] = p
        return var_pos, cls_pos

    def validate_for(self, formula: Formula) -> None:
        """Raise OrderingMismatch unless this covers exactly the formula's elements."""
        var_pos, cls_pos = self.positions()
        if len(self.elements) != formula.n + formula.m or \
                set(var_pos) != set(range(1, formula.n + 1)) or \
                set(cls_pos) != set(range(1, formula.m + 1)):
            raise OrderingMismatch(
                f"ordering covers {len(var_pos)} vars / {len(cls_pos)} clauses "
                f"in {len(self.elements)} slots; formula has n={formula.n}, m={formula.m}"
            )

    def var_subsequence(self) -> tuple[int, ...]:
        return tuple(e.var for e in self.elements if isinstance(e, VarElem))

    def cls_subsequence(self) -> tuple[int, ...]:
        return tuple(e.cls for e in self.elements if isinstance(e, ClsElem))


@dataclass(frozen=True)
class SideOrders:
    """A pair of separate total orders: one over variables, one over clauses."""

    var_order: tuple[int, ...]
    cla_order: tuple[int, ...]

    @staticmethod
    def identity(formula: Formula) -> "SideOrders":
        return SideOrders(tuple(range(1, formula.n + 1)),
                          tuple(range(1, formula.m + 1)))

    def validate_for(self, formula: Formula) -> None:
        if sorted(self.var_order) != list(range(1, formula.n + 1)):
            raise OrderingMismatch("variable order is not a permutation of 1..n")
        if sorted(self.cla_order) != list(range(1, formula.m + 1)):
            raise OrderingMismatch("clause order is not a permutation of 1..m")


def build_formula(n: int,
                  clause_lits: Sequence[Iterable[int]],
                  weights: Optional[Sequence[int]] = None) -> Formula:
    """Build a Formula from signed-integer literal lists.

    Duplicate literals within a clause are dropped; a clause containing a
    complementary pair is rejected. Weights default to 1 per clause.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if weights is not None and len(weights) != len(clause_lits):
        raise WeightCountMismatch(
            f"{len(weights)} weights for {len(clause_lits)} clauses")
    clauses = []
    for idx, lits in enumerate(clause_lits):
        seen: set[Literal] = set()
        for lit in lits:
            if lit == 0 or abs(lit) > n:
                raise OutOfRangeLiteral(
                    f"literal {lit} in clause {idx + 1} outside variables 1..{n}")
            l = Literal.from_int(lit)
            if Literal(l.var, not l.negated) in seen:
                raise TautologicalClause(
                    f"clause {idx + 1} contains both x{l.var} and -x{l.var}")
            seen.add(l)
        w = 1 if weights is None else weights[idx]
        if w < 0:
            raise ValueError(f"clause {idx + 1} has negative weight {w}")
        clauses.append(Clause(idx + 1, frozenset(seen), w))
    return Formula(n, tuple(clauses))


def sat_set(formula: Formula, tau: Assignment) -> frozenset[int]:
    """Ids of clauses with at least one literal true under the total assignment."""
    if set(tau) != set(range(1, formula.n + 1)):
        raise PartialAssignment(
            f"assignment domain {sorted(tau)} != 1..{formula.n}")
    satisfied = set()
    for c in formula.clauses:
        for lit in c.literals:
            if tau[lit.var] != lit.negated:
                satisfied.add(c.id)
                break
    return frozenset(satisfied)


def incidence_bigraph(formula: Formula) -> Bigraph:
    """Clause-variable incidence graph; polarity is ignored."""
    edges = frozenset((c.id, v) for c in formula.clauses for v in c.vars)
    return Bigraph(frozenset(range(1, formula.m + 1)),
                   frozenset(range(1, formula.n + 1)),
                   edges)

