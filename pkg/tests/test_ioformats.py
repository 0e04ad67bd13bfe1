import random

import pytest
from hypothesis import given, settings, strategies as st

from intervalsat import (
    SideOrders,
    build_formula,
    emit_dimacs,
    emit_mixed_ordering,
    emit_orders,
    parse_dimacs,
    parse_mixed_ordering,
    parse_orders,
)
from intervalsat.errors import (
    ClauseCountMismatch,
    DuplicateElement,
    LiteralOutOfRange,
    MalformedHeader,
    MissingElement,
    MissingLine,
    NotAPermutation,
    ParseError,
    TautologicalClause,
    UnknownToken,
    ZeroWeight,
)

from helpers import random_formula, random_ordering


def test_parse_cnf_basic():
    f = parse_dimacs("p cnf 2 1\n1 2 0\n")
    assert f.n == 2 and f.m == 1
    assert f.clauses[0].vars == {1, 2}
    assert f.clauses[0].weight == 1


def test_parse_wcnf_weights():
    f = parse_dimacs("p wcnf 1 2\n2 1 0\n3 -1 0\n")
    assert [c.weight for c in f.clauses] == [2, 3]


def test_parse_rejects_out_of_range():
    with pytest.raises(LiteralOutOfRange):
        parse_dimacs("p cnf 1 1\n2 0\n")


def test_parse_rejects_bad_header():
    with pytest.raises(MalformedHeader):
        parse_dimacs("1 2 0\n")
    with pytest.raises(MalformedHeader):
        parse_dimacs("p dnf 2 1\n1 0\n")


def test_parse_rejects_wrong_clause_count():
    with pytest.raises(ClauseCountMismatch):
        parse_dimacs("p cnf 2 2\n1 0\n")
    with pytest.raises(ClauseCountMismatch):
        parse_dimacs("p cnf 2 1\n1 0\n2 0\n")


def test_parse_rejects_zero_weight():
    with pytest.raises(ZeroWeight):
        parse_dimacs("p wcnf 1 1\n0 1 0\n")


def test_parse_rejects_unterminated_clause():
    with pytest.raises(ParseError):
        parse_dimacs("p cnf 2 1\n1 2\n")


def test_parse_rejects_garbage_token():
    with pytest.raises(ParseError):
        parse_dimacs("p cnf 2 1\n1 junk 0\n")


def test_parse_propagates_tautology():
    with pytest.raises(TautologicalClause):
        parse_dimacs("p cnf 1 1\n1 -1 0\n")


def test_parse_skips_comments_and_tolerates_crlf():
    f = parse_dimacs("c hello\r\np cnf 2 2\r\nc mid\r\n1 0\r\n-2 0\r\n")
    assert f.m == 2


def test_parse_multiline_clause():
    f = parse_dimacs("p cnf 3 1\n1 2\n3 0\n")
    assert f.clauses[0].vars == {1, 2, 3}


def test_dimacs_round_trip_random():
    rng = random.Random(6)
    for _ in range(40):
        f = random_formula(rng, n_max=9, m_max=9, weighted=rng.random() < 0.5)
        assert parse_dimacs(emit_dimacs(f)) == f


def test_emit_empty_clause_round_trip():
    f = build_formula(2, [[], [1]])
    assert parse_dimacs(emit_dimacs(f)) == f


def test_parse_orders_basic():
    f = build_formula(2, [[1], [2]])
    so = parse_orders("v 2 1\nc 1 2\n", f)
    assert so.var_order == (2, 1) and so.cla_order == (1, 2)


def test_parse_orders_rejects_non_permutation():
    f = build_formula(2, [[1]])
    with pytest.raises(NotAPermutation):
        parse_orders("v 1 1\nc 1\n", f)
    with pytest.raises(NotAPermutation):
        parse_orders("v 1 2\nc 2\n", f)


def test_parse_orders_missing_line():
    f = build_formula(1, [[1]])
    with pytest.raises(MissingLine):
        parse_orders("v 1\n", f)
    with pytest.raises(MissingLine):
        parse_orders("c 1\nv 1\n", f)
    with pytest.raises(ParseError):
        parse_orders("v 1\nc 1\nextra\n", f)


def test_orders_round_trip():
    f = build_formula(3, [[1], [2]])
    so = SideOrders((3, 1, 2), (2, 1))
    assert parse_orders(emit_orders(so), f) == so


def test_parse_mixed_ordering_basic():
    f = build_formula(2, [[1], [2]])
    pi = parse_mixed_ordering("x1 c1 x2 c2", f)
    assert len(pi) == 4


def test_parse_mixed_ordering_errors():
    f = build_formula(2, [[1]])
    with pytest.raises(DuplicateElement):
        parse_mixed_ordering("x1 x1 c1", f)
    with pytest.raises(MissingElement):
        parse_mixed_ordering("x1 c1", f)
    with pytest.raises(UnknownToken):
        parse_mixed_ordering("x1 x2 q1", f)
    with pytest.raises(UnknownToken):
        parse_mixed_ordering("x1 x2 c9", f)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 123456))
def test_mixed_ordering_round_trip_fuzz(seed):
    rng = random.Random(seed)
    f = random_formula(rng, n_max=10, m_max=10)
    pi = random_ordering(rng, f)
    assert parse_mixed_ordering(emit_mixed_ordering(pi), f) == pi
