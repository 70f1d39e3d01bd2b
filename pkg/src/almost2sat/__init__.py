"""Parameterized Almost 2-SAT: delete at most k clauses to make a 2-CNF formula satisfiable."""

from .compression import SolveStats, solve_2asat, solve_i1, solve_i2, split_clauses
from .formula import (
    AslasatInstance,
    Formula,
    LiteralSet,
    build_formula,
    mk_clause,
    satisfying_assignment,
    swrt,
    validate_aslasat,
)
from .separation import SeparatorSize, is_neutral, sep_size_bounded
from .solver import SearchStats, find_cs

__all__ = [
    "AslasatInstance",
    "Formula",
    "LiteralSet",
    "SearchStats",
    "SeparatorSize",
    "SolveStats",
    "build_formula",
    "find_cs",
    "is_neutral",
    "mk_clause",
    "satisfying_assignment",
    "sep_size_bounded",
    "solve_2asat",
    "solve_i1",
    "solve_i2",
    "split_clauses",
    "swrt",
    "validate_aslasat",
]
