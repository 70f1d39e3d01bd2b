"""DIMACS CNF restricted to clauses of at most two literals.

Two extra line kinds carry an annotated instance::

    a <lit> ... 0     literals added to the annotation set L
    t <lit> 0         the pivot literal (at most one such line)

Lines starting with ``c`` are comments.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .formula import Clause, Literal, from_dimacs, is_unit, mk_clause, to_dimacs


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class InputDocument:
    num_vars: int
    num_clauses: int
    clauses: list[Clause] = field(default_factory=list)
    annotations: list[Literal] = field(default_factory=list)
    pivot: Literal | None = None

    @property
    def annotated(self) -> bool:
        return self.pivot is not None


def _tokens(line: str) -> list[tuple[str, int]]:
    out = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((line[i:j], i + 1))
        i = j
    return out


def _literals(tokens, lineno: int, num_vars: int, arity: tuple[int, int] | None = None) -> list[Literal]:
    """Parse ``lit ... 0`` tokens into internal literals, checking arity before range."""
    if not tokens:
        raise ParseError("expected literals terminated by 0", lineno, 1)
    lits = []
    terminated = False
    for tok, col in tokens:
        if terminated:
            raise ParseError(f"unexpected token {tok!r} after terminating 0", lineno, col)
        try:
            n = int(tok)
        except ValueError:
            raise ParseError(f"invalid literal {tok!r}", lineno, col) from None
        if n == 0:
            terminated = True
            continue
        lits.append((n, col))
    if not terminated:
        raise ParseError("line is not terminated by 0", lineno, tokens[-1][1])
    if arity is not None and not arity[0] <= len(lits) <= arity[1]:
        lo, hi = arity
        want = str(lo) if lo == hi else f"{lo} or {hi}"
        raise ParseError(f"{len(lits)} literals given, expected {want}", lineno, tokens[0][1])
    for n, col in lits:
        if abs(n) > num_vars:
            raise ParseError(f"literal {n} exceeds declared variable count {num_vars}", lineno, col)
    return [from_dimacs(n) for n, _ in lits]


def parse_input(text: str) -> InputDocument:
    doc: InputDocument | None = None
    pivot_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokens(raw)
        if not tokens or tokens[0][0].startswith("c"):
            continue
        head, col = tokens[0]
        if head == "p":
            if doc is not None:
                raise ParseError("duplicate header", lineno, col)
            if len(tokens) != 4 or tokens[1][0] != "cnf":
                raise ParseError("malformed header, expected 'p cnf <vars> <clauses>'", lineno, col)
            try:
                nv, nc = int(tokens[2][0]), int(tokens[3][0])
            except ValueError:
                raise ParseError("header counts must be integers", lineno, tokens[2][1]) from None
            if nv < 0 or nc < 0:
                raise ParseError("header counts must be non-negative", lineno, tokens[2][1])
            doc = InputDocument(nv, nc)
            continue
        if doc is None:
            raise ParseError("content before the 'p cnf' header", lineno, col)
        if head == "a":
            doc.annotations.extend(_literals(tokens[1:], lineno, doc.num_vars))
        elif head == "t":
            if pivot_line is not None:
                raise ParseError(f"duplicate pivot line (first on line {pivot_line})", lineno, col)
            lits = _literals(tokens[1:], lineno, doc.num_vars, (1, 1))
            doc.pivot = lits[0]
            pivot_line = lineno
        else:
            lits = _literals(tokens, lineno, doc.num_vars, (1, 2))
            doc.clauses.append(mk_clause(lits[0], lits[-1]))
    if doc is None:
        raise ParseError("missing 'p cnf' header", 1, 1)
    if len(doc.clauses) != doc.num_clauses:
        raise ParseError(
            f"header declares {doc.num_clauses} clauses but {len(doc.clauses)} were given",
            len(text.splitlines()) or 1,
            1,
        )
    return doc


def render(doc: InputDocument, comments: list[str] | None = None) -> str:
    lines = [f"c {c}" for c in comments or ()]
    lines.append(f"p cnf {doc.num_vars} {len(doc.clauses)}")
    for c in doc.clauses:
        lits = (c[0],) if is_unit(c) else c
        lines.append(" ".join(str(to_dimacs(l)) for l in lits) + " 0")
    if doc.annotations:
        lines.append("a " + " ".join(str(to_dimacs(l)) for l in doc.annotations) + " 0")
    if doc.pivot is not None:
        lines.append(f"t {to_dimacs(doc.pivot)} 0")
    return "\n".join(lines) + "\n"
