import random

import pytest
from hypothesis import given, settings, strategies as st

from almost2sat.formula import AslasatInstance, InvalidInstance, LiteralSet, swrt
from almost2sat.oracle import brute_scs
from almost2sat.solver import (
    SearchDepthExceeded,
    SearchStats,
    Selection,
    alpha,
    beta,
    find_cs,
    select_clause,
)

from helpers import C, F, L, aslasat_instances, random_aslasat

F_D = [(-1, 2), (-2, -1)]


def solve(f, l_set, pivot, k, **kw):
    stats = SearchStats()
    return find_cs(AslasatInstance(f, LiteralSet(l_set), pivot, k), stats, **kw), stats


def test_select_step5():
    sel = select_clause(F((-1, 2)), {L(1)}, L(-2))
    assert sel == Selection(C(-1, 2), L(-1), L(2), 5)


def test_select_step6():
    sel = select_clause(F(*F_D), set(), L(1))
    assert sel.step == 6
    assert sel.clause == C(-1, 2)
    assert {sel.l1, sel.l2} == {L(-1), L(2)}


def test_select_ignores_unreachable_clauses():
    sel = select_clause(F(*F_D, (-3, 4)), set(), L(1))
    assert sel.clause == C(-1, 2) and sel.step == 6


def test_find_cs_examples():
    f = F((-1, 2))
    assert solve(f, {L(1)}, L(-2), 1)[0] == {C(-1, 2)}
    assert solve(f, {L(1)}, L(-2), 0)[0] is None
    f_d = F(*F_D)
    s, _ = solve(f_d, set(), L(1), 1)
    assert len(s) == 1 and s <= set(f_d.clauses)
    assert swrt(f_d.difference(s), {L(1)})


def test_step1_returns_empty_for_any_budget():
    f = F((1, 2), (-2, 3))
    for k in range(4):
        s, stats = solve(f, {L(-1)}, L(3), k)
        assert s == frozenset()
        assert stats.nodes == 1


def test_invalid_instances_are_rejected():
    with pytest.raises(InvalidInstance):
        solve(F((-1, 2)), {L(1)}, L(-1), 1)
    with pytest.raises(InvalidInstance):
        solve(F(-1), {L(1)}, L(2), 1)


def test_depth_guard():
    f = F((-1, 2), (-2, 3), (-3, 4), (-4, 5))
    with pytest.raises(SearchDepthExceeded):
        solve(f, {L(1)}, L(-5), 2, max_depth=0)


def test_measures_at_root():
    f = F(*F_D)
    assert alpha(f, set(), 2) == 2 + 2
    assert beta(f, set(), L(1), 2) == 4
    assert beta(F((-1, 2)), {L(1)}, L(-2), 1) == 1


def test_against_brute_force():
    rng = random.Random(2)
    found = 0
    for _ in range(300):
        f, l_set, pivot = random_aslasat(rng, 5, 8)
        opt, _ = brute_scs(f, l_set, pivot)
        for k in range(4):
            s, stats = solve(f, l_set, pivot, k, check_measures=True)
            assert (s is not None) == (opt <= k), (f, l_set, pivot, k)
            assert stats.within_bounds(), stats
            if s is not None:
                assert len(s) <= k and swrt(f.difference(s), set(l_set) | {pivot})
                found += opt > 0
    assert found > 100


@settings(max_examples=200, deadline=None)
@given(aslasat_instances(4, 7), st.integers(0, 3))
def test_monotone_in_k(inst, k):
    f, l_set, pivot = inst
    s, _ = solve(f, l_set, pivot, k)
    if s is not None:
        assert solve(f, l_set, pivot, k + 1)[0] is not None


@settings(max_examples=200, deadline=None)
@given(aslasat_instances(4, 7), st.integers(0, 3))
def test_measures_shrink_along_every_branch(inst, k):
    f, l_set, pivot = inst
    # check_measures raises InternalError on any violation
    _, stats = solve(f, l_set, pivot, k, check_measures=True)
    assert stats.leaves * stats.leaves <= 5 ** stats.root_beta <= 25**k
    assert stats.max_depth <= stats.root_alpha


def test_deterministic_result():
    rng = random.Random(4)
    for _ in range(50):
        f, l_set, pivot = random_aslasat(rng, 5, 8)
        a, sa = solve(f, l_set, pivot, 2)
        b, sb = solve(f, l_set, pivot, 2)
        assert a == b and sa == sb
