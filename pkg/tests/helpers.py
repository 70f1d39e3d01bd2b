"""Instance builders and hypothesis strategies shared by the test modules."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from almost2sat.formula import Formula, LiteralSet, from_dimacs, mk_clause, swrt


def L(n: int) -> int:
    """DIMACS-style literal: L(3) is x3, L(-3) is ¬x3."""
    return from_dimacs(n)


def C(a: int, b: int | None = None):
    """Clause from DIMACS literals; C(a) is the unit clause (a)."""
    return mk_clause(L(a), L(a if b is None else b))


def F(*clauses) -> Formula:
    return Formula(C(*c) if isinstance(c, tuple) else C(c) for c in clauses)


# the contradiction square over x1, x2: every single deletion repairs it
F_A = [(1, 2), (1, -2), (-1, 2), (-1, -2)]


def all_clauses(n_vars: int) -> list:
    lits = range(2 * n_vars)
    return [(a, b) for a in lits for b in lits if a <= b]


def random_clauses(rng: random.Random, n_vars: int, n_clauses: int, *, distinct: bool = True) -> list:
    pool = all_clauses(n_vars)
    if distinct:
        return rng.sample(pool, min(n_clauses, len(pool)))
    return [rng.choice(pool) for _ in range(n_clauses)]


def random_formula(rng: random.Random, max_vars: int, max_clauses: int) -> Formula:
    n = rng.randint(1, max_vars)
    # dense formulas are the interesting ones: most sparse ones are satisfiable
    m = rng.randint(min(max_clauses, n), max_clauses)
    return Formula(random_clauses(rng, n, m))


def random_literal_set(rng: random.Random, variables, p: float = 0.5) -> LiteralSet:
    return LiteralSet(2 * v + rng.randrange(2) for v in variables if rng.random() < p)


def random_aslasat(rng: random.Random, max_vars: int, max_clauses: int, extra_vars: int = 1):
    """A valid (F, L, pivot): L over Var(F) plus a few extra variables, SWRT(F, L) true."""
    while True:
        f = random_formula(rng, max_vars, max_clauses)
        universe = list(range(max(f.variables(), default=-1) + 1 + extra_vars))
        pivot_var = rng.choice(universe)
        l_set = random_literal_set(rng, [v for v in universe if v != pivot_var], rng.random())
        if swrt(f, l_set):
            return f, l_set, 2 * pivot_var + rng.randrange(2)


@st.composite
def formulas(draw, max_vars: int = 4, max_clauses: int = 6):
    n = draw(st.integers(1, max_vars))
    pool = all_clauses(n)
    clauses = draw(st.lists(st.sampled_from(pool), unique=True, max_size=max_clauses))
    return Formula(clauses)


@st.composite
def aslasat_instances(draw, max_vars: int = 4, max_clauses: int = 7):
    f = draw(formulas(max_vars, max_clauses))
    while not swrt(f, ()):
        f = Formula(f.clauses[:-1])
    universe = list(range(max(f.variables(), default=0) + 2))
    pivot_var = draw(st.sampled_from(universe))
    chosen = draw(st.lists(st.sampled_from([v for v in universe if v != pivot_var]), unique=True))
    l_set = LiteralSet(2 * v + draw(st.integers(0, 1)) for v in chosen)
    if not swrt(f, l_set):
        # drop L rather than reject the draw; keeps the strategy cheap
        l_set = LiteralSet()
    return f, l_set, 2 * pivot_var + draw(st.integers(0, 1))
