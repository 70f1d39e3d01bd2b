"""Reductions from plain clause deletion down to the annotated solver.

* :func:`solve_i1` - delete at most k clauses of a satisfiable F so that it
  becomes satisfiable with respect to a literal set L.
* :func:`solve_i2` - given a deletion set of size k+1, find one of size <= k.
* :func:`solve_2asat` - iterative compression over clause prefixes, with
  repeated clauses made distinct by splitting.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .formula import (
    AslasatInstance,
    Clause,
    Formula,
    Literal,
    LiteralSet,
    evaluate,
    lit,
    mk_clause,
    satisfying_assignment,
    swrt,
)
from .solver import InternalError, SearchStats, find_cs


class NotSatisfiable(ValueError):
    pass


class ContractViolation(ValueError):
    pass


@dataclass
class SolveStats:
    """Aggregated counters over every annotated search run by a reduction."""

    find_cs_calls: int = 0
    nodes: int = 0
    leaves: int = 0
    max_depth: int = 0
    root_alpha: int = 0
    root_beta: int = 0
    k: int = 0
    i2_calls: int = 0
    i2_combinations: int = 0
    bound_violations: list = field(default_factory=list)

    def record(self, st: SearchStats) -> None:
        self.find_cs_calls += 1
        self.nodes += st.nodes
        self.leaves += st.leaves
        self.max_depth = max(self.max_depth, st.max_depth)
        self.root_alpha = max(self.root_alpha, st.root_alpha)
        self.root_beta = max(self.root_beta, st.root_beta)
        if not st.within_bounds():
            self.bound_violations.append(st.to_dict())

    def to_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "leaves": self.leaves,
            "max_depth": self.max_depth,
            "root_alpha": self.root_alpha,
            "root_beta": self.root_beta,
            "k": self.k,
            "find_cs_calls": self.find_cs_calls,
            "i2_calls": self.i2_calls,
            "i2_combinations": self.i2_combinations,
        }


@dataclass(frozen=True)
class SplitMap:
    """Origin bookkeeping for clause splitting.

    Clause i ``(a v b)`` becomes ``(a v s_i)`` and ``(¬s_i v b)`` where
    ``s_i`` is the positive literal of the fresh variable ``split_vars[i]``.
    """

    split_vars: tuple[int, ...]
    derived: tuple[tuple[Clause, Clause], ...]

    def origin(self, c: Clause) -> int:
        return self._origin_by_var[self._split_var_in(c)]

    def _split_var_in(self, c: Clause) -> int:
        for l in c:
            if l >> 1 in self._origin_by_var:
                return l >> 1
        raise KeyError(c)

    @cached_property
    def _origin_by_var(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.split_vars)}

    def origins(self, derived_clauses: Iterable[Clause]) -> set[int]:
        return {self.origin(c) for c in derived_clauses}


def split_clauses(clauses: Sequence[Clause], first_fresh_var: int | None = None) -> tuple[Formula, SplitMap]:
    """Replace each clause by two clauses joined through a fresh variable.

    Repeats are allowed in the input; the output clauses are always distinct.
    """
    if first_fresh_var is None:
        first_fresh_var = 1 + max((l >> 1 for c in clauses for l in c), default=-1)
    out: list[Clause] = []
    split_vars = []
    derived = []
    for i, (a, b) in enumerate(clauses):
        v = first_fresh_var + i
        s = lit(v)
        pair = (mk_clause(a, s), mk_clause(s ^ 1, b))
        out.extend(pair)
        split_vars.append(v)
        derived.append(pair)
    return Formula(out), SplitMap(tuple(split_vars), tuple(derived))


@dataclass(frozen=True)
class I1Reduction:
    reduced: AslasatInstance
    sentinel_pos: Literal
    sentinel_neg: Literal
    split: SplitMap
    l1: frozenset[Literal]  # literals of L replaced by sentinel_pos
    l2: frozenset[Literal]  # literals of L replaced by sentinel_neg


def reduce_i1(
    f: Formula,
    l_set: Iterable[Literal],
    k: int,
    *,
    assignment: Iterable[Literal] | None = None,
    short_circuit: bool = True,
) -> I1Reduction | None:
    """Build (F*, {s1}, s2, k) from a satisfiable F and literal set L.

    Returns None when some satisfying assignment of F already contains L,
    in which case the empty set answers the problem.  ``assignment`` fixes
    the satisfying assignment that partitions L; ``short_circuit=False``
    builds the reduced instance even when that partition leaves L2 empty.
    """
    fvars = f.variables()
    l_set = LiteralSet(l for l in l_set if l >> 1 in fvars)
    if assignment is not None:
        p = frozenset(assignment)
        if not evaluate(f, p):
            raise ValueError("the given assignment does not satisfy F")
        if short_circuit and l_set <= p:
            return None
    else:
        if short_circuit and satisfying_assignment(f, l_set) is not None:
            return None
        p = satisfying_assignment(f)
        if p is None:
            raise NotSatisfiable("formula is not satisfiable")
    l1 = frozenset(l for l in l_set if l in p)
    l2 = frozenset(l_set - l1)
    split_f, split = split_clauses(f.clauses, f.max_var + 1)
    fresh = f.max_var + 1 + len(f)
    s1, s2 = lit(fresh), lit(fresh + 1)
    sub: dict[Literal, Literal] = {}
    for l in l1:
        sub[l], sub[l ^ 1] = s1, s1 ^ 1
    for l in l2:
        sub[l], sub[l ^ 1] = s2, s2 ^ 1
    reduced = Formula(mk_clause(sub.get(a, a), sub.get(b, b)) for a, b in split_f.clauses)
    inst = AslasatInstance(reduced, LiteralSet([s1]), s2, k)
    return I1Reduction(inst, s1, s2, split, l1, l2)


def solve_i1(
    f: Formula,
    l_set: Iterable[Literal],
    k: int,
    stats: SolveStats | None = None,
) -> frozenset[Clause] | None:
    """At most k clauses of F whose removal leaves F satisfiable w.r.t. L, or None."""
    l_set = LiteralSet(l_set)
    red = reduce_i1(f, l_set, k)
    if red is None:
        return frozenset()
    st = SearchStats()
    s_star = find_cs(red.reduced, st, validate=__debug__)
    if stats is not None:
        stats.record(st)
    if s_star is None:
        return None
    result = frozenset(f.clauses[i] for i in red.split.origins(s_star))
    if len(result) > k or not swrt(f.difference(result), l_set):
        raise InternalError("mapped-back deletion set does not verify")
    return result


def _literal_choices(clauses: Sequence[Clause]) -> Iterator[frozenset[Literal]]:
    """One literal per clause (first literal first), pruning contradictory prefixes."""
    chosen: list[Literal] = []
    counts: dict[Literal, int] = {}

    def rec(i: int) -> Iterator[frozenset[Literal]]:
        if i == len(clauses):
            yield frozenset(chosen)
            return
        a, b = clauses[i]
        for l in (a,) if a == b else (a, b):
            if counts.get(l ^ 1):
                continue
            chosen.append(l)
            counts[l] = counts.get(l, 0) + 1
            yield from rec(i + 1)
            counts[l] -= 1
            chosen.pop()

    yield from rec(0)


def solve_i2(
    f: Formula,
    s: Iterable[Clause],
    k: int,
    stats: SolveStats | None = None,
) -> frozenset[Clause] | None:
    """Shrink a (k+1)-clause deletion set of F to one of size at most k, or None."""
    wanted = set(s)
    s = [c for c in f.clauses if c in wanted]
    if len(s) != k + 1:
        raise ContractViolation(f"expected {k + 1} clauses in S, got {len(s)}")
    rest = f.difference(s)
    if not swrt(rest, ()):
        raise ContractViolation("F minus S is not satisfiable")
    if stats is not None:
        stats.i2_calls += 1
    combos = 0
    for size in range(k + 1):
        for e in itertools.combinations(s, size):
            eset = set(e)
            kept = [c for c in s if c not in eset]
            for l_set in _literal_choices(kept):
                combos += 1
                if stats is not None:
                    stats.i2_combinations += 1
                found = solve_i1(rest, l_set, k - size, stats)
                if found is not None:
                    if combos > 3 ** len(s):
                        raise InternalError("enumeration exceeded 3^|S| combinations")
                    return frozenset(e) | found
    if combos > 3 ** len(s):
        raise InternalError("enumeration exceeded 3^|S| combinations")
    return None


def _compress(f: Formula, k: int, stats: SolveStats | None, eager: bool) -> frozenset[Clause] | None:
    s: frozenset[Clause] = frozenset()
    for i in range(1, len(f) + 1):
        prefix = Formula._trusted(f.clauses[:i])
        c = f.clauses[i - 1]
        if eager and swrt(prefix.difference(s), ()):
            continue
        s_new = s | {c}
        if len(s_new) <= k:
            s = s_new
        else:
            s = solve_i2(prefix, s_new, k, stats)
            if s is None:
                return None
        if not swrt(prefix.difference(s), ()):
            raise InternalError(f"compression step {i} produced an invalid deletion set")
    return s


def solve_2asat(
    clauses: Sequence[Clause],
    k: int,
    stats: SolveStats | None = None,
    *,
    eager: bool = True,
) -> list[int] | None:
    """At most k clause positions (1-based, ascending) whose deletion makes the input satisfiable.

    ``clauses`` may contain repeats.  With ``eager`` a prefix step whose new
    clause keeps the current deletion set valid skips compression.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    clauses = [mk_clause(*c) for c in clauses]
    if stats is not None:
        stats.k = k
    if len(set(clauses)) != len(clauses):
        split_f, split = split_clauses(clauses)
        found = _compress(split_f, k, stats, eager)
        if found is None:
            return None
        return sorted(i + 1 for i in split.origins(found))
    f = Formula(clauses)
    found = _compress(f, k, stats, eager)
    if found is None:
        return None
    return sorted(f.index(c) + 1 for c in found)
