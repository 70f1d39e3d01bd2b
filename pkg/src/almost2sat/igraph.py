"""Implication graph of a 2-CNF formula and walks of the formula.

Arc ``(l1, l2)`` represents clause ``(¬l1 v l2)``.  A two-literal clause
gives two arcs and a unit clause ``(l v l)`` gives the single arc ``(¬l, l)``.
An F-walk step with first literal ``l1`` and second literal ``l2`` maps to
the arc ``(¬l1, l2)``, so an F-walk from ``x`` to ``y`` is a D-walk from
``¬x`` to ``y``.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .formula import Clause, Formula, Literal, format_literal


# (tail, head, clause): the arc (tail, head) represents clause (¬tail v head)
Arc = tuple[Literal, Literal, Clause]


class ImplicationGraph:
    """Adjacency over literal nodes.

    ``arcs`` is sorted by (tail, head, clause) and an arc id is a position
    in it.  Graphs derived by :meth:`without_clause` share the arc list and
    simply drop ids from their adjacency lists.
    """

    __slots__ = ("formula", "arcs", "out", "inc", "heads", "node_count", "_by_tail_clause")

    def __init__(self, formula: Formula, arcs: Iterable[Arc], node_count: int):
        arcs = sorted(arcs)
        self.formula = formula
        self.arcs = arcs
        self.node_count = node_count
        out: list[list[int]] = [[] for _ in range(node_count)]
        heads: list[list[int]] = [[] for _ in range(node_count)]
        inc: list[list[int]] = [[] for _ in range(node_count)]
        for i, (tail, head, _) in enumerate(arcs):
            out[tail].append(i)
            heads[tail].append(head)
            inc[head].append(i)
        self.out = out
        self.heads = heads
        self.inc = inc
        self._by_tail_clause = None

    def has_node(self, node: Literal) -> bool:
        return 0 <= node < self.node_count

    def arc_for(self, tail: Literal, clause: Clause) -> int:
        if self._by_tail_clause is None:
            self._by_tail_clause = {
                (self.arcs[i][0], self.arcs[i][2]): i for lst in self.out for i in lst
            }
        return self._by_tail_clause[(tail, clause)]

    def arc_ids(self) -> list[int]:
        return [i for lst in self.out for i in lst]

    def arc_pairs(self) -> list[tuple[Literal, Literal]]:
        return [(self.arcs[i][0], self.arcs[i][1]) for i in self.arc_ids()]

    def without_clause(self, c: Clause, formula: Formula) -> ImplicationGraph:
        """The graph of ``formula`` = this graph's formula minus clause ``c``."""
        g = ImplicationGraph.__new__(ImplicationGraph)
        g.formula = formula
        g.arcs = self.arcs
        g.node_count = self.node_count
        g._by_tail_clause = None
        out, heads, inc = list(self.out), list(self.heads), list(self.inc)
        arcs = self.arcs
        a, b = c
        for tail in {a ^ 1, b ^ 1}:
            kept = [i for i in out[tail] if arcs[i][2] != c]
            out[tail] = kept
            heads[tail] = [arcs[i][1] for i in kept]
        for head in {a, b}:
            inc[head] = [i for i in inc[head] if arcs[i][2] != c]
        g.out, g.heads, g.inc = out, heads, inc
        return g


def build_igraph(f: Formula, extra_vars: Iterable[int] = ()) -> ImplicationGraph:
    max_var = max([f.max_var, *extra_vars], default=-1)
    arcs = []
    for c in f.clauses:
        a, b = c
        arcs.append((a ^ 1, b, c))
        if a != b:
            arcs.append((b ^ 1, a, c))
    return ImplicationGraph(f, arcs, 2 * (max_var + 1))


@dataclass(frozen=True)
class Walk:
    """A walk of a formula: clause indices each paired with its first literal."""

    formula: Formula
    steps: tuple[tuple[int, Literal], ...]

    def __post_init__(self):
        if not self.steps:
            raise ValueError("a walk is non-empty")
        prev = None
        for ci, first in self.steps:
            c = self.formula.clauses[ci]
            if first not in c:
                raise ValueError(f"{format_literal(first)} is not a literal of clause #{ci}")
            if prev is not None and prev != first ^ 1:
                raise ValueError("consecutive steps do not chain")
            prev = _other(c, first)

    def __len__(self) -> int:
        return len(self.steps)

    def oriented(self) -> list[tuple[Literal, Literal]]:
        return [(first, _other(self.formula.clauses[ci], first)) for ci, first in self.steps]

    @property
    def first(self) -> Literal:
        return self.steps[0][1]

    @property
    def last(self) -> Literal:
        ci, first = self.steps[-1]
        return _other(self.formula.clauses[ci], first)

    def clause_indices(self) -> list[int]:
        return [ci for ci, _ in self.steps]

    def clauses(self) -> list[Clause]:
        return [self.formula.clauses[ci] for ci, _ in self.steps]

    def is_path(self) -> bool:
        idx = self.clause_indices()
        return len(set(idx)) == len(idx)

    def to_trace(self) -> list[list[int]]:
        """JSON-friendly form: ``[clause index, 1 if the clause's first stored literal leads]``."""
        return [[ci, int(self.formula.clauses[ci][0] == first)] for ci, first in self.steps]


def _other(c: Clause, first: Literal) -> Literal:
    return c[1] if c[0] == first else c[0]


def reverse(w: Walk) -> Walk:
    steps = []
    for ci, first in reversed(w.steps):
        steps.append((ci, _other(w.formula.clauses[ci], first)))
    return Walk(w.formula, tuple(steps))


def f_walk_to_d_walk(g: ImplicationGraph, w: Walk) -> list[int]:
    """Arc ids of the D-walk representing ``w``."""
    clauses = w.formula.clauses
    return [g.arc_for(first ^ 1, clauses[ci]) for ci, first in w.steps]


def d_path_to_f_walk(g: ImplicationGraph, arcs: Sequence[int]) -> Walk:
    steps = []
    for ai in arcs:
        a = g.arcs[ai]
        steps.append((g.formula.index(a[2]), a[0] ^ 1))
    return Walk(g.formula, tuple(steps))


def bfs_arc_path(g: ImplicationGraph, starts: Iterable[Literal], target: Literal) -> list[int] | None:
    """Shortest non-empty arc path from any start node to ``target``.

    Nodes are expanded in ascending id, arcs in ascending head id.  The
    target may itself be a start node, in which case a cycle is sought.
    """
    starts = sorted({s for s in starts if g.has_node(s)})
    if not starts or not g.has_node(target):
        return None
    parent: dict[int, int] = {}  # node -> arc id used to reach it
    seen = set(starts)
    queue = deque(starts)
    out, arcs = g.out, g.arcs
    while queue:
        u = queue.popleft()
        for ai in out[u]:
            v = arcs[ai][1]
            if v == target:
                path = [ai]
                node = u
                while node in parent:
                    pa = parent[node]
                    path.append(pa)
                    node = arcs[pa][0]
                path.reverse()
                return path
            if v not in seen:
                seen.add(v)
                parent[v] = ai
                queue.append(v)
    return None


def reaches(g: ImplicationGraph, starts: Iterable[Literal], target: Literal) -> bool:
    """Whether a non-empty D-path leads from some start node to ``target``."""
    if not g.has_node(target):
        return False
    heads = g.heads
    stack = [s for s in set(starts) if g.has_node(s)]
    seen = set(stack)
    while stack:
        u = stack.pop()
        for v in heads[u]:
            if v == target:
                return True
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return False


def shortest_walk(g: ImplicationGraph, sources: Iterable[Literal], target: Literal) -> Walk | None:
    """Minimum-length F-walk whose first literal is in ``sources`` and last is ``target``."""
    path = bfs_arc_path(g, (s ^ 1 for s in sources), target)
    if path is None:
        return None
    return d_path_to_f_walk(g, path)


def find_self_walk(g: ImplicationGraph, pivot: Literal) -> Walk | None:
    """An F-walk from ``¬pivot`` to ``¬pivot`` (a D-path from pivot to ``¬pivot``)."""
    return shortest_walk(g, (pivot ^ 1,), pivot ^ 1)


def extract_path(w: Walk) -> Walk:
    """Shrink a walk from ``¬L`` (with SWRT(F, L)) into a path with the same endpoints.

    Repeated clauses in such a walk always carry the same orientation, so the
    segment strictly after the first occurrence up to and including the last
    occurrence can be spliced out.  Raises ValueError when a repeated clause
    occurs with both orientations, which cannot happen under the precondition.
    """
    steps = list(w.steps)
    while True:
        first_pos: dict[int, int] = {}
        last_pos: dict[int, int] = {}
        for pos, (ci, _) in enumerate(steps):
            first_pos.setdefault(ci, pos)
            last_pos[ci] = pos
        dup = next((ci for ci, _ in steps if last_pos[ci] != first_pos[ci]), None)
        if dup is None:
            return Walk(w.formula, tuple(steps))
        i, j = first_pos[dup], last_pos[dup]
        if steps[i][1] != steps[j][1]:
            raise ValueError(
                f"clause #{dup} is traversed in both directions; the walk does not start"
                " from a literal set the formula is satisfiable with respect to"
            )
        steps = steps[: i + 1] + steps[j + 1 :]
