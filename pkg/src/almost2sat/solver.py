"""Branching solver for the parameterized annotated problem (F, L, l, k).

``find_cs`` returns a set of at most ``k`` clauses whose removal makes F
satisfiable with respect to ``L ∪ {l}``, or ``None`` when no such set exists.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .formula import (
    AslasatInstance,
    Clause,
    Formula,
    Literal,
    LiteralSet,
    format_literal,
    mk_clause,
    satisfying_assignment,
    swrt,
    validate_aslasat,
)
from .igraph import Walk, find_self_walk, shortest_walk
from .separation import extends_satisfiably, is_neutral, sep_size_bounded


class InternalError(AssertionError):
    pass


class SearchDepthExceeded(RuntimeError):
    pass


@dataclass
class SearchStats:
    """Search-tree counters for one ``find_cs`` call.

    ``root_alpha`` is |Var(F) \\ Var(L)| + k and ``root_beta`` is
    max(0, 2k - SepSize(F, ¬L, ¬l)) at the root.
    """

    nodes: int = 0
    leaves: int = 0
    max_depth: int = 0
    root_alpha: int = 0
    root_beta: int = 0
    k: int = 0

    def leaf_bound(self) -> float:
        return math.sqrt(5) ** self.root_beta

    def within_bounds(self) -> bool:
        # integer comparison against sqrt(5)^beta: leaves^2 <= 5^beta
        return (
            self.leaves * self.leaves <= 5**self.root_beta
            and self.root_beta <= 2 * self.k
            and self.max_depth <= self.root_alpha
        )

    def to_dict(self) -> dict:
        return asdict(self)


def alpha(f: Formula, l_set, k: int) -> int:
    lv = {l >> 1 for l in l_set}
    return sum(1 for v in f.variables() if v not in lv) + k


def beta(f: Formula, l_set, pivot: Literal, k: int) -> int:
    s = sep_size_bounded(f, (l ^ 1 for l in l_set), pivot ^ 1, 2 * k)
    if s.exceeded:
        return 0
    return max(0, 2 * k - s.value)


@dataclass(frozen=True)
class Selection:
    clause: Clause
    l1: Literal
    l2: Literal
    step: int  # 5 or 6


def select_clause(f: Formula, l_set, pivot: Literal) -> Selection:
    """Pick the branching clause, assuming F is not satisfiable w.r.t. L ∪ {pivot}."""
    g = f.igraph
    walk = shortest_walk(g, [l ^ 1 for l in l_set], pivot ^ 1)
    if walk is not None:
        l1, l2 = walk.oriented()[0]
        lv = {l >> 1 for l in l_set}
        if l1 ^ 1 not in l_set or l2 >> 1 in lv:
            raise InternalError(f"shortest walk starts with an unusable clause in {f!r}")
        return Selection(walk.clauses()[0], l1, l2, 5)
    walk = find_self_walk(g, pivot)
    p = satisfying_assignment(f, l_set) if walk is not None else None
    if walk is not None and p is not None:
        for first, second in walk.oriented():
            if first in p and second in p:
                a, b = mk_clause(first, second)
                return Selection((a, b), a, b, 6)
    raise InternalError(
        f"no clause qualifies for selection in {f!r} with L={sorted(map(format_literal, l_set))}"
        f" and pivot {format_literal(pivot)}"
    )


class _Search:
    def __init__(self, pivot: Literal, stats: SearchStats, check_measures: bool, max_depth: int):
        self.pivot = pivot
        self.stats = stats
        self.check_measures = check_measures
        self.max_depth = max_depth

    def _enter(self, depth: int) -> None:
        st = self.stats
        st.nodes += 1
        if depth > st.max_depth:
            st.max_depth = depth
        if depth > self.max_depth:
            raise SearchDepthExceeded(f"search depth exceeded {self.max_depth}")

    def _check_child(self, parent, child, multi: bool) -> None:
        (f, l_set, k), (f1, l1, k1) = parent, child
        p = self.pivot
        a0, a1 = alpha(f, l_set, k), alpha(f1, l1, k1)
        b0, b1 = beta(f, l_set, p, k), beta(f1, l1, p, k1)
        if not a1 < a0:
            raise InternalError(f"alpha did not decrease: {a0} -> {a1}")
        if b1 > b0 or (multi and not b1 < b0):
            raise InternalError(f"beta did not behave: {b0} -> {b1} (multi-child={multi})")

    def run(self, f: Formula, l_set: LiteralSet, k: int, depth: int) -> frozenset | None:
        pivot = self.pivot
        while True:
            self._enter(depth)
            # Step 1
            target = l_set | {pivot}
            if extends_satisfiably(f, l_set, pivot):
                self.stats.leaves += 1
                return frozenset()
            # Step 2
            if k == 0:
                self.stats.leaves += 1
                return None
            # Step 3
            if k >= len(f):
                self.stats.leaves += 1
                return frozenset(f.clauses)
            # Step 4
            sep = sep_size_bounded(f, [l ^ 1 for l in l_set], pivot ^ 1, k)
            if sep.exceeded:
                self.stats.leaves += 1
                return None
            # Steps 5 and 6
            sel = select_clause(f, l_set, pivot)
            c, l1, l2 = sel.clause, sel.l1, sel.l2
            not_target = {l ^ 1 for l in target}
            in1, in2 = l1 in not_target, l2 in not_target
            parent = (f, l_set, k)
            # Step 7
            if in1 and in2:
                child = (f.remove(c), l_set, k - 1)
                if self.check_measures:
                    self._check_child(parent, child, multi=False)
                s = self.run(*child, depth + 1)
                return None if s is None else s | {c}
            # Step 8
            if not in1 and not in2:
                children = [
                    (f, l_set.add(l1), k),
                    (f, l_set.add(l2), k),
                    (f.remove(c), l_set, k - 1),
                ]
                if self.check_measures:
                    for child in children:
                        self._check_child(parent, child, multi=True)
                for i, child in enumerate(children):
                    s = self.run(*child, depth + 1)
                    if s is not None:
                        return s | {c} if i == 2 else s
                return None
            if in2:
                l1, l2 = l2, l1
            # Step 9
            if not is_neutral(f, l_set, pivot, l2, k, base=sep):
                children = [(f, l_set.add(l2), k), (f.remove(c), l_set, k - 1)]
                if self.check_measures:
                    for child in children:
                        self._check_child(parent, child, multi=True)
                for i, child in enumerate(children):
                    s = self.run(*child, depth + 1)
                    if s is not None:
                        return s | {c} if i == 1 else s
                return None
            # Step 10: tail call on (F, L ∪ {l2}, l, k)
            child = (f, l_set.add(l2), k)
            if self.check_measures:
                self._check_child(parent, child, multi=False)
            l_set = child[1]
            depth += 1


def find_cs(
    inst: AslasatInstance,
    stats: SearchStats | None = None,
    *,
    check_measures: bool = False,
    max_depth: int | None = None,
    validate: bool = True,
) -> frozenset[Clause] | None:
    """Solve (F, L, l, k): a culprit set of size at most k, or None.

    ``check_measures`` asserts at every branching that the depth measure
    strictly decreases and the separator-slack measure never increases.
    """
    f, l_set, pivot, k = inst.f, inst.l_set, inst.pivot, inst.k
    if validate:
        validate_aslasat(f, l_set, pivot)
    if stats is None:
        stats = SearchStats()
    stats.k = k
    stats.root_alpha = alpha(f, l_set, k)
    stats.root_beta = beta(f, l_set, pivot, k)
    if max_depth is None:
        max_depth = stats.root_alpha + 1
    result = _Search(pivot, stats, check_measures, max_depth).run(f, l_set, k, 0)
    if result is not None:
        if len(result) > k or not swrt(f.difference(result), l_set | {pivot}):
            raise InternalError("returned culprit set does not verify")
    return result
