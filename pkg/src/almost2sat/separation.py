"""Bounded clause-separator sizes via unit-capacity max-flow on the implication graph."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from .formula import Formula, Literal, is_non_contradictory, swrt
from .igraph import reaches


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class SeparatorSize:
    """Exact separator size, or ``value=None`` when it exceeds ``bound``."""

    value: int | None
    bound: int

    @property
    def exceeded(self) -> bool:
        return self.value is None

    @classmethod
    def exact(cls, value: int, bound: int) -> SeparatorSize:
        return cls(value, bound)

    @classmethod
    def exceeds(cls, bound: int) -> SeparatorSize:
        return cls(None, bound)

    def __str__(self) -> str:
        return f">{self.bound}" if self.value is None else str(self.value)


def max_flow_bounded(g, starts: Iterable[Literal], sink: Literal, limit: int) -> int:
    """Arc-disjoint paths from ``starts`` to ``sink`` in ``g``, counting at most ``limit``.

    Edmonds-Karp with unit arc capacities; the start nodes act as one virtual
    super-source, so the graph itself is never modified.
    """
    starts = sorted({s for s in starts if g.has_node(s)})
    if not starts or not g.has_node(sink) or limit <= 0:
        return 0
    arcs, out, inc = g.arcs, g.out, g.inc
    flow = bytearray(len(arcs))
    is_start = set(starts)
    value = 0
    while value < limit:
        # parent[node] = (arc id, +1 forward / -1 backward)
        parent: dict[int, tuple[int, int]] = {}
        seen = set(starts)
        queue = deque(starts)
        found = False
        while queue and not found:
            u = queue.popleft()
            for ai in out[u]:
                if flow[ai]:
                    continue
                v = arcs[ai][1]
                if v in seen:
                    continue
                seen.add(v)
                parent[v] = (ai, 1)
                if v == sink:
                    found = True
                    break
                queue.append(v)
            if found:
                break
            for ai in inc[u]:
                if not flow[ai]:
                    continue
                v = arcs[ai][0]
                if v in seen:
                    continue
                seen.add(v)
                parent[v] = (ai, -1)
                queue.append(v)
        if not found:
            break
        node = sink
        while node not in is_start:
            ai, direction = parent[node]
            if direction == 1:
                flow[ai] = 1
                node = arcs[ai][0]
            else:
                flow[ai] = 0
                node = arcs[ai][1]
        value += 1
    return value


def sep_size_bounded(
    f: Formula,
    sources: Iterable[Literal],
    sink: Literal,
    bound: int,
    *,
    check: bool = False,
) -> SeparatorSize:
    """Smallest number of clauses whose removal kills every F-path from ``sources`` to ``sink``.

    Paths of F starting at a literal of ``sources`` correspond to D-paths
    starting at the negated nodes.  At most ``bound + 1`` augmentations run.
    With ``check`` the flow/clause-cut equality hypothesis is verified first:
    F satisfiable with respect to ``¬sources`` and ``sink`` outside their variables.
    """
    sources = frozenset(sources)
    if check:
        negated = [s ^ 1 for s in sources]
        if not is_non_contradictory(negated) or not swrt(f, negated):
            raise PreconditionError("formula is not satisfiable with respect to the negated sources")
        if sink >> 1 in {s >> 1 for s in sources}:
            raise PreconditionError("sink variable occurs among the sources")
    if bound < 0:
        return SeparatorSize.exceeds(bound)
    value = max_flow_bounded(f.igraph, (s ^ 1 for s in sources), sink, bound + 1)
    if value > bound:
        return SeparatorSize.exceeds(bound)
    return SeparatorSize.exact(value, bound)


def extends_satisfiably(f: Formula, l_set: Iterable[Literal], l: Literal) -> bool:
    """SWRT(F, L ∪ {l}) for a valid instance (F, L, l).

    Under that precondition the answer is false exactly when ``¬l`` is
    reachable in the implication graph from the nodes of L ∪ {l}, which is
    a single graph search instead of a strongly-connected-components pass.
    """
    starts = set(l_set)
    starts.add(l)
    return not reaches(f.igraph, starts, l ^ 1)


def is_neutral(
    f: Formula,
    l_set: Iterable[Literal],
    pivot: Literal,
    candidate: Literal,
    bound: int,
    *,
    base: SeparatorSize | None = None,
) -> bool:
    """Whether adding ``candidate`` to L keeps the instance valid and SepSize(F, ¬L, ¬pivot) unchanged.

    ``(f, l_set, pivot)`` must be a valid instance.  ``base`` may carry the
    already known SepSize(F, ¬L, ¬pivot) for the same ``bound``.
    """
    l_set = frozenset(l_set)
    if candidate ^ 1 in l_set or candidate >> 1 == pivot >> 1:
        return False
    if candidate not in l_set and not extends_satisfiably(f, l_set, candidate):
        return False
    extended = l_set | {candidate}
    before = base if base is not None else sep_size_bounded(f, (l ^ 1 for l in l_set), pivot ^ 1, bound)
    after = sep_size_bounded(f, (l ^ 1 for l in extended), pivot ^ 1, bound)
    if before.exceeded or after.exceeded:
        # both are known to be at most ``bound`` inside the solver
        return before.exceeded and after.exceeded
    return before.value == after.value
