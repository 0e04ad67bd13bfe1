"""Reduction gadgets from 3-partition to 1-interval bigraph recognition,
interval-representation checking, and a random k-interval instance factory.

The gadget lays out, per group, a path of b+1 slot vertices stitched by
connector vertices, with delimiter vertices gluing consecutive groups, a
track vertex spanning all slots, anchor vertices pinning both ends, and
one numeral path per element whose inner vertices must be interspersed
into slot gaps. A valid partition yields a placement where every
connector-side vertex overlaps at most one non-neighbor, certifying the
graph is a 1-interval bigraph.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    InfeasibleParameters,
    InvalidInstance,
    MissingInterval,
    NotASolution,
)
from .formula import Clause, ClsElem, Formula, Literal, MixedOrdering, VarElem

Number = int | float | Fraction
Interval = tuple[Number, Number]
IntervalRep = dict[str, Interval]


@dataclass(frozen=True)
class ThreePartitionInstance:
    b: int
    sizes: tuple[int, ...]

    def __post_init__(self):
        if len(self.sizes) % 3 != 0 or not self.sizes:
            raise InvalidInstance("need 3n element sizes")
        if self.b < 4:
            raise InvalidInstance("b must be at least 4")
        for s in self.sizes:
            if not (4 * s > self.b and 2 * s < self.b):
                raise InvalidInstance(
                    f"size {s} outside (b/4, b/2) for b={self.b}")
        if sum(self.sizes) != self.groups * self.b:
            raise InvalidInstance(
                f"sizes sum to {sum(self.sizes)}, expected {self.groups * self.b}")

    @property
    def groups(self) -> int:
        return len(self.sizes) // 3


@dataclass(frozen=True, eq=False)
class LabeledBigraph:
    """Bipartite graph with role-labeled vertices.

    `designated` is the side that may receive added edges (the track and
    all connector vertices); `base` holds slots, delimiters, anchors and
    numeral vertices. Edges are (designated, base) pairs.
    """

    base: frozenset[str]
    designated: frozenset[str]
    edges: frozenset[tuple[str, str]]
    labels: dict[str, str]

    @property
    def vertex_count(self) -> int:
        return len(self.base) + len(self.designated)


def _slot(i: int, j: int) -> str:
    return f"s[{i},{j}]"


def gen_3partition_bigraph(inst: ThreePartitionInstance) -> LabeledBigraph:
    """Build the recognition-hardness gadget for a 3-partition instance."""
    n, b = inst.groups, inst.b
    base: set[str] = set()
    designated: set[str] = set()
    edges: set[tuple[str, str]] = set()
    labels: dict[str, str] = {}

    def add_base(name, label):
        base.add(name)
        labels[name] = label

    def add_desig(name, label):
        designated.add(name)
        labels[name] = label

    for i in range(1, n + 1):
        for j in range(1, b + 2):
            add_base(_slot(i, j), "slot")
        for j in range(1, b + 1):
            name = f"l[{i},{j}]"
            add_desig(name, "slot-connector")
            edges.add((name, _slot(i, j)))
            edges.add((name, _slot(i, j + 1)))

    for i in range(1, n):
        add_base(f"sd[{i}]", "delimiter")
        d1 = f"ld1[{i}]"
        d2 = f"ld2[{i}]"
        add_desig(d1, "delimiter-connector")
        add_desig(d2, "delimiter-connector")
        for v in (_slot(i, b), _slot(i, b + 1), f"sd[{i}]", _slot(i + 1, 1)):
            edges.add((d1, v))
        for v in (_slot(i, b + 1), f"sd[{i}]", _slot(i + 1, 1), _slot(i + 1, 2)):
            edges.add((d2, v))

    add_desig("t", "track")
    for i in range(1, n + 1):
        for j in range(1, b + 2):
            edges.add(("t", _slot(i, j)))
    for i in range(2, n):
        edges.add(("t", f"sd[{i}]"))

    add_base("al", "anchor")
    add_base("ar", "anchor")
    add_desig("lal", "anchor-connector")
    add_desig("lar", "anchor-connector")
    for v in ("al", _slot(1, 1), _slot(1, 2)):
        edges.add(("lal", v))
    for v in ("ar", _slot(n, b + 1), _slot(n, b)):
        edges.add(("lar", v))

    for a, size in enumerate(inst.sizes, start=1):
        for j in range(1, size + 1):
            add_base(f"n[{a},{j}]", "numeral")
            edges.add(("t", f"n[{a},{j}]"))
        for j in range(0, size + 1):
            name = f"ln[{a},{j}]"
            add_desig(name, "numeral-connector")
            if j >= 1:
                edges.add((name, f"n[{a},{j}]"))
            if j < size:
                edges.add((name, f"n[{a},{j + 1}]"))

    return LabeledBigraph(frozenset(base), frozenset(designated),
                          frozenset(edges), labels)


def representation_from_partition(inst: ThreePartitionInstance,
                                  partition: Sequence[Sequence[int]]) -> IntervalRep:
    """Interval placement certifying the gadget at budget 1, derived from a
    valid partition (1-based element indices, one triple per group)."""
    n, b = inst.groups, inst.b
    flat = [a for group in partition for a in group]
    if len(partition) != n or any(len(g) != 3 for g in partition) or \
            sorted(flat) != list(range(1, 3 * n + 1)):
        raise NotASolution("partition must split elements 1..3n into n triples")
    for group in partition:
        if sum(inst.sizes[a - 1] for a in group) != b:
            raise NotASolution(
                f"group {tuple(group)} sums to "
                f"{sum(inst.sizes[a - 1] for a in group)}, expected {b}")

    rep: IntervalRep = {}
    bases = {i: 2 + (i - 1) * (2 * b + 2) for i in range(1, n + 1)}
    for i in range(1, n + 1):
        bi = bases[i]
        for j in range(1, b + 2):
            rep[_slot(i, j)] = (bi + 2 * j - 1, bi + 2 * j)
        for j in range(1, b + 1):
            rep[f"l[{i},{j}]"] = (bi + 2 * j - 1, bi + 2 * j + 2)
    for i in range(1, n):
        bi = bases[i]
        rep[f"sd[{i}]"] = (bi + 2 * b + 2, bi + 2 * b + 3)
        rep[f"ld1[{i}]"] = (bi + 2 * b - 1, bi + 2 * b + 4)
        rep[f"ld2[{i}]"] = (bi + 2 * b + 1, bi + 2 * b + 6)
    right_end = bases[n] + 2 * b + 2
    rep["t"] = (bases[1] + 1, right_end)
    rep["al"] = (bases[1], bases[1] + 1)
    rep["lal"] = (bases[1], bases[1] + 4)
    rep["ar"] = (right_end, right_end + 1)
    rep["lar"] = (bases[n] + 2 * b - 1, right_end + 1)

    # numeral j of an element at gap offset o sits in the gap between
    # slots o+j and o+j+1 of its group
    for i, group in enumerate(partition, start=1):
        bi = bases[i]
        offset = 0
        for a in group:
            size = inst.sizes[a - 1]
            for j in range(1, size + 1):
                g = bi + 2 * (offset + j)
                rep[f"n[{a},{j}]"] = (g, g + 1)
            rep[f"ln[{a},0]"] = rep[f"n[{a},1]"]
            for j in range(1, size):
                g = bi + 2 * (offset + j)
                rep[f"ln[{a},{j}]"] = (g, g + 3)
            rep[f"ln[{a},{size}]"] = rep[f"n[{a},{size}]"]
            offset += size
    return rep


def _overlap(a: Interval, b: Interval) -> bool:
    # shared endpoints do not count as overlap
    return max(a[0], b[0]) < min(a[1], b[1])


@dataclass(frozen=True)
class RepVerdict:
    ok: bool
    unrealized_edges: tuple[tuple[str, str], ...]
    excess: dict[str, tuple[str, ...]]  # designated vertex -> overlapping non-neighbors


def check_representation(graph: LabeledBigraph, rep: IntervalRep,
                         k: int) -> RepVerdict:
    """Accept iff every edge's intervals overlap and every designated-side
    vertex overlaps at most k non-neighbors on the other side."""
    for v in graph.base | graph.designated:
        if v not in rep:
            raise MissingInterval(f"no interval for vertex {v}")
    unrealized = tuple(sorted(
        (d, o) for (d, o) in graph.edges if not _overlap(rep[d], rep[o])))
    excess: dict[str, tuple[str, ...]] = {}
    for d in sorted(graph.designated):
        extra = tuple(sorted(
            o for o in graph.base
            if (d, o) not in graph.edges and _overlap(rep[d], rep[o])))
        if extra:
            excess[d] = extra
    ok = not unrealized and all(len(v) <= k for v in excess.values())
    return RepVerdict(ok, unrealized, excess)


def random_k_interval_instance(n: int, m: int, k: int, max_width: int,
                               seed: int) -> tuple[Formula, MixedOrdering]:
    """Seeded random formula with an ordering of width at most k.

    Clauses start as contiguous variable runs ending at the variable just
    before their slot (a width-0 configuration), then up to k variables
    are deleted from each clause, never emptying it.
    """
    if n < 1 or m < 1 or max_width < 1 or k < 0 or k > max_width:
        raise InfeasibleParameters(
            f"need n,m,maxWidth >= 1 and 0 <= k <= maxWidth; "
            f"got n={n} m={m} k={k} maxWidth={max_width}")
    rng = random.Random(seed)
    placements = []
    for _ in range(m):
        t = rng.randint(1, n)
        width = rng.randint(1, min(t, max_width))
        run = list(range(t - width + 1, t + 1))
        drop = rng.randint(0, min(k, width - 1))
        keep = sorted(rng.sample(run, width - drop))
        lits = [v if rng.random() < 0.5 else -v for v in keep]
        placements.append((t, lits))
    placements.sort(key=lambda item: item[0])
    clauses = [Clause(cid, frozenset(Literal.from_int(l) for l in lits))
               for cid, (_, lits) in enumerate(placements, start=1)]
    formula = Formula(n, tuple(clauses))
    elements: list[VarElem | ClsElem] = []
    cid = 1
    for t in range(1, n + 1):
        elements.append(VarElem(t))
        while cid <= m and placements[cid - 1][0] == t:
            elements.append(ClsElem(cid))
            cid += 1
    return formula, MixedOrdering(tuple(elements))
