"""2-CNF data model.

Literals are plain ints: variable ``v`` (dense, 0-based) is encoded as
``2*v`` when positive and ``2*v + 1`` when negated, so negation is ``l ^ 1``
and integer order is the canonical (variable, polarity) order.  A clause is
a sorted pair of literals; a unit clause ``(l)`` is stored as ``(l, l)``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

Literal = int
Clause = tuple[int, int]


def lit(var: int, positive: bool = True) -> Literal:
    return 2 * var + (0 if positive else 1)


def neg(l: Literal) -> Literal:
    return l ^ 1


def var_of(l: Literal) -> int:
    return l >> 1


def is_positive(l: Literal) -> bool:
    return not l & 1


def from_dimacs(n: int) -> Literal:
    """Map a signed 1-based DIMACS literal to the internal encoding."""
    if n == 0:
        raise ValueError("0 is not a literal")
    return lit(abs(n) - 1, n > 0)


def to_dimacs(l: Literal) -> int:
    v = var_of(l) + 1
    return v if is_positive(l) else -v


def mk_clause(x: Literal, y: Literal) -> Clause:
    return (x, y) if x <= y else (y, x)


def is_unit(c: Clause) -> bool:
    return c[0] == c[1]


def negate_all(lits: Iterable[Literal]) -> frozenset[Literal]:
    return frozenset(l ^ 1 for l in lits)


def format_literal(l: Literal) -> str:
    return str(to_dimacs(l))


def format_clause(c: Clause) -> str:
    a, b = c
    if a == b:
        return f"({format_literal(a)})"
    return f"({format_literal(a)} v {format_literal(b)})"


class DuplicateError(ValueError):
    def __init__(self, index: int, clause: Clause):
        super().__init__(f"clause {format_clause(clause)} repeated at index {index}")
        self.index = index
        self.clause = clause


class InvalidInstance(ValueError):
    """Base class for rejected 2-ASLASAT instances."""


class ContradictoryLiteralSet(InvalidInstance):
    pass


class UnsatisfiableWrtLiterals(InvalidInstance):
    pass


class PivotVariableInLiterals(InvalidInstance):
    pass


class LiteralSet(frozenset):
    """A frozenset of literals that never holds both ``l`` and ``neg(l)``."""

    def __new__(cls, members: Iterable[Literal] = ()):
        self = super().__new__(cls, members)
        for l in self:
            if l ^ 1 in self:
                raise ContradictoryLiteralSet(
                    f"literal set contains both {format_literal(l)} and its negation"
                )
        return self

    def add(self, l: Literal) -> LiteralSet:
        if l in self:
            return self
        if l ^ 1 in self:
            raise ContradictoryLiteralSet(
                f"adding {format_literal(l)} would make the literal set contradictory"
            )
        return LiteralSet(frozenset.union(self, (l,)))

    def variables(self) -> frozenset[int]:
        return frozenset(l >> 1 for l in self)

    def negated(self) -> frozenset[Literal]:
        return negate_all(self)

    def __repr__(self) -> str:
        return "LiteralSet({" + ", ".join(format_literal(l) for l in sorted(self)) + "})"


def is_non_contradictory(lits: Iterable[Literal]) -> bool:
    s = set(lits)
    return not any(l ^ 1 in s for l in s)


class Formula:
    """An ordered collection of pairwise distinct clauses.

    Instances are immutable; derived structures (the implication graph) are
    cached on first use.
    """

    __slots__ = ("clauses", "_index", "_vars", "_igraph")

    def __init__(self, clauses: Iterable[Clause] = ()):
        clauses = tuple(clauses)
        index: dict[Clause, int] = {}
        for i, c in enumerate(clauses):
            if c[0] > c[1]:
                raise ValueError(f"clause {c!r} is not in canonical order")
            if c in index:
                raise DuplicateError(i, c)
            index[c] = i
        self.clauses = clauses
        self._index = index
        self._vars = None
        self._igraph = None

    @classmethod
    def _trusted(cls, clauses: tuple[Clause, ...]) -> Formula:
        f = cls.__new__(cls)
        f.clauses = clauses
        f._index = {c: i for i, c in enumerate(clauses)}
        f._vars = None
        f._igraph = None
        return f

    def __len__(self) -> int:
        return len(self.clauses)

    def __iter__(self) -> Iterator[Clause]:
        return iter(self.clauses)

    def __contains__(self, c: object) -> bool:
        return c in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Formula) and self.clauses == other.clauses

    def __hash__(self) -> int:
        return hash(self.clauses)

    def __repr__(self) -> str:
        return "Formula([" + ", ".join(format_clause(c) for c in self.clauses) + "])"

    def index(self, c: Clause) -> int:
        return self._index[c]

    def variables(self) -> frozenset[int]:
        if self._vars is None:
            self._vars = frozenset(l >> 1 for c in self.clauses for l in c)
        return self._vars

    @property
    def var_count(self) -> int:
        return len(self.variables())

    @property
    def max_var(self) -> int:
        return max(self.variables(), default=-1)

    def remove(self, c: Clause) -> Formula:
        """F with clause ``c`` removed (no-op when absent)."""
        i = self._index.get(c)
        if i is None:
            return self
        child = Formula._trusted(self.clauses[:i] + self.clauses[i + 1 :])
        if self._igraph is not None:
            child._igraph = self._igraph.without_clause(c, child)
        return child

    def difference(self, removed: Iterable[Clause]) -> Formula:
        removed = set(removed)
        if not removed.intersection(self._index):
            return self
        return Formula._trusted(tuple(c for c in self.clauses if c not in removed))

    __sub__ = difference

    @property
    def igraph(self):
        if self._igraph is None:
            from .igraph import build_igraph

            self._igraph = build_igraph(self)
        return self._igraph


def build_formula(clauses: Sequence[Clause]) -> Formula:
    """Build a formula, rejecting repeated clauses with :class:`DuplicateError`."""
    return Formula(mk_clause(*c) for c in clauses)


@dataclass(frozen=True)
class AslasatInstance:
    f: Formula
    l_set: LiteralSet
    pivot: Literal
    k: int

    def __post_init__(self):
        if not isinstance(self.l_set, LiteralSet):
            object.__setattr__(self, "l_set", LiteralSet(self.l_set))
        if self.k < 0:
            raise InvalidInstance(f"budget must be non-negative, got {self.k}")

    def validate(self) -> None:
        validate_aslasat(self.f, self.l_set, self.pivot)


def _scc_components(f: Formula, units: Iterable[Literal]) -> tuple[list[int], int]:
    """Tarjan SCC over the implication graph of F plus unit arcs ``(¬u, u)``.

    Returns (component id per node, node count).  Component ids follow
    Tarjan's completion order, which is a reverse topological order of the
    condensation.
    """
    adj = f.igraph.heads
    size = len(adj)
    units = set(units)
    if units:
        size = max(size, max(u | 1 for u in units) + 1)
        adj = adj + [()] * (size - len(adj))
        for u in units:
            adj[u ^ 1] = [*adj[u ^ 1], u]

    comp = [-1] * size
    low = [0] * size
    order = [-1] * size
    stack: list[int] = []
    on_stack = [False] * size
    counter = 0
    n_comp = 0
    for root in range(size):
        if order[root] != -1:
            continue
        if not adj[root]:
            # a node without successors is a singleton component
            order[root] = counter
            counter += 1
            comp[root] = n_comp
            n_comp += 1
            continue
        order[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, iter(adj[root]))]
        while work:
            v, it = work[-1]
            for w in it:
                if order[w] == -1:
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(adj[w])))
                    break
                if on_stack[w] and order[w] < low[v]:
                    low[v] = order[w]
            else:
                work.pop()
                if work:
                    u = work[-1][0]
                    if low[v] < low[u]:
                        low[u] = low[v]
                if low[v] == order[v]:
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp[w] = n_comp
                        if w == v:
                            break
                    n_comp += 1
    return comp, size


def _check_l_set(l_set: Iterable[Literal]) -> frozenset[Literal]:
    s = frozenset(l_set)
    if not is_non_contradictory(s):
        raise ContradictoryLiteralSet("literal set is contradictory")
    return s


def swrt(f: Formula, l_set: Iterable[Literal]) -> bool:
    """True iff F has a satisfying assignment containing no negation of ``l_set``."""
    s = _check_l_set(l_set)
    comp, size = _scc_components(f, s)
    return all(comp[x] != comp[x + 1] for x in range(0, size, 2))


def satisfying_assignment(f: Formula, l_set: Iterable[Literal] = ()) -> frozenset[Literal] | None:
    """A satisfying assignment over Var(F) avoiding ``¬l_set``, or None."""
    s = _check_l_set(l_set)
    comp, _ = _scc_components(f, s)
    chosen = []
    for v in sorted(f.variables()):
        x = 2 * v
        if comp[x] == comp[x + 1]:
            return None
        # lower Tarjan id = later in topological order = set true
        chosen.append(x if comp[x] < comp[x + 1] else x + 1)
    for x in range(0, len(comp), 2):
        if comp[x] == comp[x + 1]:
            return None
    return frozenset(chosen)


def evaluate(f: Formula, assignment: Iterable[Literal]) -> bool:
    a = set(assignment)
    return all(c[0] in a or c[1] in a for c in f.clauses)


def validate_aslasat(f: Formula, l_set: Iterable[Literal], pivot: Literal) -> None:
    """Raise an :class:`InvalidInstance` subclass unless (F, L, pivot) is valid."""
    s = frozenset(l_set)
    if not is_non_contradictory(s):
        raise ContradictoryLiteralSet("literal set is contradictory")
    if pivot >> 1 in {l >> 1 for l in s}:
        raise PivotVariableInLiterals(
            f"pivot {format_literal(pivot)} shares its variable with the literal set"
        )
    if not swrt(f, s):
        raise UnsatisfiableWrtLiterals("formula is not satisfiable with respect to the literal set")
