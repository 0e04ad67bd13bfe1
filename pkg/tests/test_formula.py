import random

import pytest
from hypothesis import given, strategies as st

from intervalsat import (
    Literal,
    build_formula,
    incidence_bigraph,
    sat_set,
)
from intervalsat.errors import (
    OutOfRangeLiteral,
    PartialAssignment,
    TautologicalClause,
    WeightCountMismatch,
)

from helpers import random_formula


def test_build_default_weight():
    f = build_formula(2, [[1, 2]])
    assert f.m == 1
    assert f.clauses[0].weight == 1
    assert f.clauses[0].vars == {1, 2}


def test_build_weighted_units():
    f = build_formula(1, [[1], [-1]], weights=[2, 3])
    assert [c.weight for c in f.clauses] == [2, 3]
    assert f.clause(2).literals == frozenset({Literal(1, True)})


def test_build_rejects_tautology():
    with pytest.raises(TautologicalClause):
        build_formula(1, [[1, -1]])


def test_build_rejects_out_of_range():
    with pytest.raises(OutOfRangeLiteral):
        build_formula(1, [[2]])
    with pytest.raises(OutOfRangeLiteral):
        build_formula(2, [[0]])


def test_build_rejects_weight_mismatch():
    with pytest.raises(WeightCountMismatch):
        build_formula(2, [[1], [2]], weights=[1])


def test_build_dedups_literals():
    f = build_formula(2, [[1, 1, 2]])
    assert len(f.clauses[0].literals) == 2


def test_build_accepts_empty_clause():
    f = build_formula(2, [[]])
    assert f.clauses[0].literals == frozenset()


def test_sat_set_examples():
    f = build_formula(2, [[1, 2]])
    assert sat_set(f, {1: False, 2: False}) == frozenset()
    assert sat_set(f, {1: True, 2: False}) == {1}
    g = build_formula(1, [[1], [-1]])
    assert sat_set(g, {1: True}) == {1}


def test_sat_set_requires_total_assignment():
    f = build_formula(2, [[1]])
    with pytest.raises(PartialAssignment):
        sat_set(f, {1: True})
    with pytest.raises(PartialAssignment):
        sat_set(f, {1: True, 2: False, 3: True})


@given(st.data())
def test_sat_set_monotone_under_added_true_literal(data):
    n = data.draw(st.integers(1, 6))
    width = data.draw(st.integers(1, n))
    vs = data.draw(st.permutations(range(1, n + 1)))[:width]
    signs = data.draw(st.lists(st.booleans(), min_size=width, max_size=width))
    lits = [v if s else -v for v, s in zip(vs, signs)]
    tau = {x: data.draw(st.booleans()) for x in range(1, n + 1)}
    f = build_formula(n, [lits])
    base = sat_set(f, tau)
    # adding a literal that is true under tau can only keep or gain the clause
    extra = data.draw(st.integers(1, n))
    if extra in {abs(l) for l in lits}:
        return
    lit = extra if tau[extra] else -extra
    g = build_formula(n, [lits + [lit]])
    assert base <= sat_set(g, tau)


def test_incidence_examples():
    f = build_formula(2, [[1, -2]])
    assert incidence_bigraph(f).edges == {(1, 1), (1, 2)}
    g = build_formula(3, [])
    big = incidence_bigraph(g)
    assert big.edges == frozenset() and big.var_vertices == {1, 2, 3}
    h = build_formula(2, [[1], [1, 2]])
    assert incidence_bigraph(h).edges == {(1, 1), (2, 1), (2, 2)}


def test_incidence_degree_equals_clause_size():
    rng = random.Random(5)
    for _ in range(20):
        f = random_formula(rng, n_max=8, m_max=8)
        big = incidence_bigraph(f)
        for c in f.clauses:
            assert sum(1 for (ci, _) in big.edges if ci == c.id) == len(c.vars)
