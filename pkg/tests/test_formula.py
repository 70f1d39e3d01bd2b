import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from almost2sat.formula import (
    AslasatInstance,
    ContradictoryLiteralSet,
    DuplicateError,
    Formula,
    InvalidInstance,
    LiteralSet,
    PivotVariableInLiterals,
    UnsatisfiableWrtLiterals,
    build_formula,
    evaluate,
    from_dimacs,
    is_unit,
    mk_clause,
    satisfying_assignment,
    swrt,
    to_dimacs,
    validate_aslasat,
)
from almost2sat.igraph import build_igraph
from almost2sat.oracle import brute_swrt

from helpers import C, F, F_A, L, all_clauses, formulas, random_formula

literals = st.integers(0, 19)


def test_mk_clause_is_commutative_example():
    assert mk_clause(L(1), L(2)) == mk_clause(L(2), L(1)) == (L(1), L(2))


def test_unit_clause_is_a_repeated_pair():
    c = mk_clause(L(-3), L(-3))
    assert c == (L(-3), L(-3))
    assert is_unit(c)


def test_mk_clause_mixed_polarity_equality():
    assert mk_clause(L(1), L(-2)) == mk_clause(L(-2), L(1))


@given(literals, literals)
def test_mk_clause_canonical(x, y):
    c = mk_clause(x, y)
    assert c == mk_clause(y, x)
    assert c[0] <= c[1]
    assert set(c) == {x, y}


@given(st.integers(-50, 50).filter(bool))
def test_dimacs_round_trip(n):
    assert to_dimacs(from_dimacs(n)) == n
    assert from_dimacs(-n) == from_dimacs(n) ^ 1


def test_build_formula_keeps_order():
    f = build_formula([(L(1), L(2)), (L(-1), L(2))])
    assert len(f) == 2
    assert f.clauses == (C(1, 2), C(-1, 2))


def test_build_formula_rejects_duplicates_with_index():
    with pytest.raises(DuplicateError) as info:
        build_formula([(L(1), L(2)), (L(2), L(1))])
    assert info.value.index == 1
    assert info.value.clause == C(1, 2)


def test_empty_formula():
    f = build_formula([])
    assert len(f) == 0
    assert f.variables() == frozenset()
    assert swrt(f, ())


def test_formula_rejects_non_canonical_clause():
    with pytest.raises(ValueError):
        Formula([(L(2), L(1))])


def test_literal_set_rejects_contradiction():
    with pytest.raises(ContradictoryLiteralSet):
        LiteralSet([L(1), L(-1)])
    s = LiteralSet([L(1)])
    with pytest.raises(ContradictoryLiteralSet):
        s.add(L(-1))
    assert s.add(L(2)) == {L(1), L(2)}
    assert s.add(L(1)) is s


def test_swrt_examples():
    assert swrt(F((1, 2)), [L(-1)])
    assert not swrt(F(1, -1), ())
    f_a = F(*F_A)
    assert not swrt(f_a, ())
    assert not brute_swrt(f_a, ())


def test_swrt_ignores_isolated_annotation_variables():
    f = F((1, 2))
    assert swrt(f, [L(5), L(-7)])
    assert not swrt(F(1, -1), [L(9)])


def test_satisfying_assignment_examples():
    p = satisfying_assignment(F((-1, 2)), [L(1)])
    assert p == {L(1), L(2)}
    assert satisfying_assignment(F(1, -1), ()) is None
    assert satisfying_assignment(Formula(), [L(26)]) == frozenset()


def test_validate_aslasat_examples():
    f = F((-1, 2))
    validate_aslasat(f, [L(1)], L(-2))
    with pytest.raises(ContradictoryLiteralSet):
        validate_aslasat(f, [L(1), L(-1)], L(3))
    with pytest.raises(PivotVariableInLiterals):
        validate_aslasat(f, [L(1)], L(-1))
    with pytest.raises(UnsatisfiableWrtLiterals):
        validate_aslasat(F(-1), [L(1)], L(2))
    assert issubclass(UnsatisfiableWrtLiterals, InvalidInstance)


def test_instance_rejects_negative_budget():
    with pytest.raises(InvalidInstance):
        AslasatInstance(F((1, 2)), LiteralSet(), L(3), -1)


def _literal_sets(variables):
    """Every non-contradictory literal set over ``variables``."""
    for choice in itertools.product((None, 0, 1), repeat=len(variables)):
        yield frozenset(2 * v + c for v, c in zip(variables, choice) if c is not None)


def test_swrt_exhaustive_two_variables():
    # every formula over x1, x2 against every L over x1, x2 and two extra variables
    pool = all_clauses(2)
    l_sets = list(_literal_sets([0, 1, 2, 3]))
    mismatches = 0
    for r in range(len(pool) + 1):
        for clauses in itertools.combinations(pool, r):
            f = Formula(clauses)
            for l_set in l_sets:
                mismatches += swrt(f, l_set) != brute_swrt(f, l_set)
    assert mismatches == 0


def test_swrt_random_against_brute():
    rng = random.Random(7)
    for _ in range(1000):
        f = random_formula(rng, 5, 8)
        universe = list(range(max(f.variables(), default=-1) + 3))
        for _ in range(4):
            l_set = {2 * v + rng.randrange(2) for v in universe if rng.random() < 0.4}
            assert swrt(f, l_set) == brute_swrt(f, l_set), (f, l_set)


@settings(max_examples=300)
@given(formulas(5, 8), st.data())
def test_satisfying_assignment_agrees_with_swrt(f, data):
    universe = list(range(max(f.variables(), default=-1) + 3))
    chosen = data.draw(st.lists(st.sampled_from(universe), unique=True))
    l_set = {2 * v + data.draw(st.integers(0, 1)) for v in chosen}
    p = satisfying_assignment(f, l_set)
    assert (p is None) == (not swrt(f, l_set))
    if p is not None:
        assert {l >> 1 for l in p} == f.variables()
        assert len(p) == len(f.variables())
        assert evaluate(f, p)
        assert not p & {l ^ 1 for l in l_set}


@given(formulas(4, 8), st.data())
def test_difference_preserves_order(f, data):
    removed = data.draw(st.lists(st.sampled_from(all_clauses(4)), unique=True))
    g = f.difference(removed)
    assert list(g.clauses) == [c for c in f.clauses if c not in set(removed)]
    assert len(g) == len(f) - len(set(removed) & set(f.clauses))


@given(formulas(4, 8), st.data())
def test_remove_derives_the_same_graph(f, data):
    # the child graph is derived incrementally from the parent's
    if not len(f):
        return
    _ = f.igraph
    c = data.draw(st.sampled_from(f.clauses))
    child = f.remove(c)
    fresh = build_igraph(Formula(child.clauses))
    assert sorted(child.igraph.arc_pairs()) == sorted(fresh.arc_pairs())
    for node in range(fresh.node_count):
        assert child.igraph.heads[node] == fresh.heads[node]
    assert swrt(child, ()) == brute_swrt(child, ())
