"""Seeded random 2-CNF instances with a planted deletion set."""

from __future__ import annotations

import random

from .dimacs import InputDocument
from .formula import Clause, lit, mk_clause


def planted_instance(
    seed: int,
    n_vars: int,
    n_clauses: int,
    planted_k: int,
    allow_repeats: bool = False,
) -> tuple[InputDocument, list[bool]]:
    """Random formula whose clauses all hold under a hidden assignment, except ``planted_k``.

    The planted clauses falsify both of their literals under the hidden
    assignment, so deleting them leaves a satisfiable formula and the
    optimum is at most ``planted_k``.  Returns the document and the hidden
    assignment (polarity per variable).
    """
    if n_vars < 2:
        raise ValueError("need at least 2 variables")
    if not 0 <= planted_k <= n_clauses:
        raise ValueError("planted_k must lie between 0 and the clause count")
    pairs = n_vars * (n_vars - 1) // 2
    if not allow_repeats and (n_clauses - planted_k > 3 * pairs or planted_k > pairs):
        raise ValueError("too many clauses requested for distinct clauses over this many variables")

    rng = random.Random(seed)
    hidden = [rng.random() < 0.5 for _ in range(n_vars)]

    def draw(satisfied: bool) -> Clause:
        while True:
            u, v = rng.sample(range(n_vars), 2)
            a = lit(u, rng.random() < 0.5)
            b = lit(v, rng.random() < 0.5)
            true_a = (a & 1 == 0) == hidden[u]
            true_b = (b & 1 == 0) == hidden[v]
            if satisfied and (true_a or true_b):
                return mk_clause(a, b)
            if not satisfied and not true_a and not true_b:
                return mk_clause(a, b)

    clauses: list[Clause] = []
    seen: set[Clause] = set()
    for satisfied, count in ((True, n_clauses - planted_k), (False, planted_k)):
        made = 0
        while made < count:
            c = draw(satisfied)
            if not allow_repeats and c in seen:
                continue
            seen.add(c)
            clauses.append(c)
            made += 1
    rng.shuffle(clauses)
    return InputDocument(n_vars, len(clauses), clauses), hidden
