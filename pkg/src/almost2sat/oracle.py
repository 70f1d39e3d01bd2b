"""Exhaustive reference implementations for small instances.

Nothing here shares code with the fast paths beyond the data model; every
answer comes from enumerating assignments, clause subsets, or paths.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from functools import lru_cache

from .formula import Clause, Formula, Literal, is_non_contradictory

MAX_VARS = 24
MAX_SCS_CLAUSES = 12
MAX_SEP_CLAUSES = 10


class TooLarge(ValueError):
    pass


@lru_cache(maxsize=None)
def _truth_columns(n: int) -> tuple[int, tuple[int, ...]]:
    """Bit i of column j is 1 iff variable j is true in assignment number i (of 2**n)."""
    size = 1 << n
    cols = []
    for j in range(n):
        width = 1 << j
        col = ((1 << width) - 1) << width
        span = 2 * width
        while span < size:
            col |= col << span
            span *= 2
        cols.append(col)
    return (1 << size) - 1, tuple(cols)


def brute_swrt(f: Formula | Iterable[Clause], l_set: Iterable[Literal] = ()) -> bool:
    """Direct check of every assignment of Var(F) for one satisfying F and avoiding ¬L.

    All 2**n assignments are evaluated at once as the bits of one integer.
    """
    clauses = list(f)
    l_set = set(l_set)
    if not is_non_contradictory(l_set):
        raise ValueError("literal set is contradictory")
    variables = sorted({l >> 1 for c in clauses for l in c})
    if len(variables) > MAX_VARS:
        raise TooLarge(f"{len(variables)} variables exceed the oracle limit of {MAX_VARS}")
    full, cols = _truth_columns(len(variables))
    pos = {v: j for j, v in enumerate(variables)}

    def holds(l: Literal) -> int:
        col = cols[pos[l >> 1]]
        return full ^ col if l & 1 else col

    alive = full
    for l in l_set:
        if l >> 1 in pos:
            alive &= holds(l)
    for a, b in clauses:
        alive &= holds(a) | holds(b)
        if not alive:
            return False
    return alive != 0


def brute_scs(
    f: Formula,
    l_set: Iterable[Literal] = (),
    pivot: Literal | None = None,
) -> tuple[int, frozenset[Clause]]:
    """Smallest clause set S with F minus S satisfiable w.r.t. L ∪ {pivot}."""
    clauses = list(f)
    if len(clauses) > MAX_SCS_CLAUSES:
        raise TooLarge(f"{len(clauses)} clauses exceed the oracle limit of {MAX_SCS_CLAUSES}")
    target = set(l_set)
    if pivot is not None:
        target.add(pivot)
    for size in range(len(clauses) + 1):
        for removed in itertools.combinations(range(len(clauses)), size):
            gone = set(removed)
            rest = [c for i, c in enumerate(clauses) if i not in gone]
            if brute_swrt(rest, target):
                return size, frozenset(clauses[i] for i in removed)
    raise ValueError("target literal set is contradictory")


def brute_multiset_deletion(clauses: Sequence[Clause]) -> tuple[int, tuple[int, ...]]:
    """Fewest positions (0-based) to delete from a clause list, repeats allowed."""
    clauses = list(clauses)
    if len(clauses) > MAX_SCS_CLAUSES:
        raise TooLarge(f"{len(clauses)} clauses exceed the oracle limit of {MAX_SCS_CLAUSES}")
    for size in range(len(clauses) + 1):
        for removed in itertools.combinations(range(len(clauses)), size):
            gone = set(removed)
            if brute_swrt([c for i, c in enumerate(clauses) if i not in gone]):
                return size, removed
    raise AssertionError("deleting everything always satisfies")


def enumerate_walks(f: Formula, max_len: int) -> Iterator[tuple[tuple[int, Literal], ...]]:
    """Every walk of F with at most ``max_len`` steps, as (clause index, first literal) tuples."""
    clauses = f.clauses
    starts = [(ci, first) for ci, c in enumerate(clauses) for first in set(c)]

    def extend(walk):
        yield walk
        if len(walk) == max_len:
            return
        ci, first = walk[-1]
        c = clauses[ci]
        second = c[1] if c[0] == first else c[0]
        want = second ^ 1
        for cj, d in enumerate(clauses):
            if want in d:
                yield from extend(walk + ((cj, want),))

    for s in starts:
        yield from extend((s,))


def _walk_ends(f: Formula, walk) -> tuple[Literal, Literal]:
    ci, first = walk[-1]
    c = f.clauses[ci]
    return walk[0][1], c[1] if c[0] == first else c[0]


def enumerate_paths(f: Formula, sources: Iterable[Literal], sink: Literal) -> list[tuple[tuple[int, Literal], ...]]:
    """All paths (walks with distinct clauses) from ``sources`` to ``sink``."""
    sources = set(sources)
    clauses = f.clauses
    found = []

    def extend(walk, used):
        ci, first = walk[-1]
        c = clauses[ci]
        second = c[1] if c[0] == first else c[0]
        if second == sink:
            found.append(walk)
        want = second ^ 1
        for cj, d in enumerate(clauses):
            if cj not in used and want in d:
                extend(walk + ((cj, want),), used | {cj})

    for ci, c in enumerate(clauses):
        for first in set(c):
            if first in sources:
                extend(((ci, first),), frozenset((ci,)))
    return found


def brute_shortest_walk_length(f: Formula, sources: Iterable[Literal], target: Literal, max_len: int) -> int | None:
    sources = set(sources)
    best = None
    for w in enumerate_walks(f, max_len):
        a, b = _walk_ends(f, w)
        if a in sources and b == target and (best is None or len(w) < best):
            best = len(w)
    return best


def brute_separator(f: Formula, sources: Iterable[Literal], sink: Literal) -> tuple[int, int]:
    """(minimum clause separator size, maximum number of clause-disjoint paths)."""
    if len(f) > MAX_SEP_CLAUSES:
        raise TooLarge(f"{len(f)} clauses exceed the oracle limit of {MAX_SEP_CLAUSES}")
    masks = set()
    for p in enumerate_paths(f, sources, sink):
        m = 0
        for ci, _ in p:
            m |= 1 << ci
        masks.add(m)
    masks = sorted(masks)
    if not masks:
        return 0, 0

    min_sep = None
    for size in range(len(f) + 1):
        for cut in itertools.combinations(range(len(f)), size):
            cm = sum(1 << i for i in cut)
            if all(m & cm for m in masks):
                min_sep = size
                break
        if min_sep is not None:
            break

    @lru_cache(maxsize=None)
    def pack(available: int, start: int) -> int:
        best = 0
        for i in range(start, len(masks)):
            m = masks[i]
            if m & available == m:
                best = max(best, 1 + pack(available & ~m, i + 1))
        return best

    return min_sep, pack((1 << len(f)) - 1, 0)
