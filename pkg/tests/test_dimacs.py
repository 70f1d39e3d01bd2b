import pytest
from hypothesis import given, strategies as st

from almost2sat.dimacs import InputDocument, ParseError, parse_input, render
from almost2sat.formula import mk_clause

from helpers import C, L


def test_parse_basic():
    doc = parse_input("p cnf 2 2\n1 2 0\n-1 -2 0\n")
    assert doc.num_vars == 2
    assert doc.clauses == [C(1, 2), C(-1, -2)]
    assert not doc.annotated


def test_parse_annotations():
    doc = parse_input("p cnf 2 1\n1 2 0\na 1 0\nt -2 0\n")
    assert doc.annotations == [L(1)]
    assert doc.pivot == L(-2)


def test_comments_and_units():
    doc = parse_input("c hello\np cnf 3 2\nc mid\n3 0\n  -1   2 0\n")
    assert doc.clauses == [C(3), C(-1, 2)]


@pytest.mark.parametrize(
    "text, line, column, fragment",
    [
        ("p cnf 1 1\n1 -1 2 0\n", 2, 1, "3 literals"),
        ("p cnf 1 1\n2 0\n", 2, 1, "exceeds"),
        ("p cnf 2 1\n1 2 0\nt 1 0\nt 2 0\n", 4, 1, "duplicate pivot"),
        ("p cnf x 1\n1 0\n", 1, 7, "integers"),
        ("p dnf 1 1\n1 0\n", 1, 1, "malformed header"),
        ("1 0\n", 1, 1, "before"),
        ("p cnf 1 2\n1 0\n", 2, 1, "declares 2"),
        ("p cnf 1 1\n1\n", 2, 1, "not terminated"),
        ("p cnf 1 1\n1 0 1\n", 2, 5, "after terminating"),
        ("p cnf 1 1\np cnf 1 1\n1 0\n", 2, 1, "duplicate header"),
        ("", 1, 1, "missing"),
    ],
)
def test_parse_errors(text, line, column, fragment):
    with pytest.raises(ParseError) as info:
        parse_input(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert fragment in str(info.value)


@st.composite
def documents(draw):
    n = draw(st.integers(1, 6))
    lit = st.integers(0, 2 * n - 1)
    clauses = draw(st.lists(st.builds(mk_clause, lit, lit), max_size=10))
    pivot = draw(st.none() | lit)
    annotations = draw(st.lists(lit, max_size=3)) if pivot is not None else []
    return InputDocument(n, len(clauses), clauses, annotations, pivot)


@given(documents())
def test_parse_render_identity(doc):
    text = render(doc)
    assert parse_input(text) == doc
    assert render(parse_input(text)) == text
