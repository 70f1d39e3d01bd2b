"""Command-line front end: ``a2sat solve``, ``a2sat gen`` and ``a2sat oracle``.

Exit status is 0 when a culprit set was found, 1 for NO and 2 on any error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .compression import SolveStats, solve_2asat
from .dimacs import InputDocument, ParseError, parse_input, render
from .formula import (
    AslasatInstance,
    DuplicateError,
    Formula,
    InvalidInstance,
    LiteralSet,
    build_formula,
    mk_clause,
    swrt,
    validate_aslasat,
)
from .generate import planted_instance
from .oracle import MAX_VARS, TooLarge, brute_multiset_deletion, brute_scs, brute_separator, brute_swrt
from .solver import SearchStats, find_cs

EXIT_FOUND, EXIT_NO, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    """Bad input reported on stderr with exit status 2."""


def _read_doc(path: str) -> InputDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    try:
        return parse_input(text)
    except ParseError as e:
        raise UsageError(f"{path}: {e}") from None


def _annotated_instance(doc: InputDocument, k: int) -> AslasatInstance:
    try:
        f = build_formula(doc.clauses)
    except DuplicateError as e:
        raise UsageError(f"annotated input must not repeat clauses: {e}") from None
    try:
        l_set = LiteralSet(doc.annotations)
        validate_aslasat(f, l_set, doc.pivot)
    except InvalidInstance as e:
        raise UsageError(f"invalid annotated instance ({type(e).__name__}): {e}") from None
    return AslasatInstance(f, l_set, doc.pivot, k)


def _solve_once(doc: InputDocument, k: int) -> tuple[list[int] | None, dict]:
    if doc.annotated:
        inst = _annotated_instance(doc, k)
        st = SearchStats()
        found = find_cs(inst, st)
        if found is None:
            return None, st.to_dict()
        return sorted(inst.f.index(c) + 1 for c in found), st.to_dict()
    st = SolveStats()
    found = solve_2asat(doc.clauses, k, st)
    return found, st.to_dict()


def _verify(doc: InputDocument, indices: list[int]) -> str:
    """Re-check a deletion with the SCC test and, when small enough, by exhaustive search."""
    gone = set(indices)
    rest = [c for i, c in enumerate(doc.clauses, start=1) if i not in gone]
    target = list(doc.annotations)
    if doc.pivot is not None:
        target.append(doc.pivot)
    # repeats are harmless for satisfiability, so check the distinct survivors
    f = Formula(dict.fromkeys(mk_clause(*c) for c in rest))
    if not swrt(f, target):
        raise UsageError("verification failed: remaining clauses are not satisfiable")
    if f.var_count <= min(MAX_VARS, 16):
        if not brute_swrt(f, target):
            raise UsageError("verification failed: exhaustive search disagrees")
        return "c verify ok (scc, exhaustive)"
    return "c verify ok (scc)"


def cmd_solve(args) -> int:
    if args.k < 0:
        raise UsageError("-k must be non-negative")
    doc = _read_doc(args.cnf)
    if doc.annotations and not doc.annotated:
        raise UsageError("annotation lines need a pivot line 't <lit> 0'")
    ks = range(args.k + 1) if args.sweep else (args.k,)
    for k in ks:
        found, stats = _solve_once(doc, k)
        if found is not None:
            break
    out = sys.stdout
    if found is None:
        out.write("NO\n")
    else:
        out.write(f"CS {len(found)}\n" + " ".join(map(str, found)) + "\n")
    if args.stats:
        out.write("c stats " + json.dumps(stats, sort_keys=True) + "\n")
    if found is not None and args.verify:
        print(_verify(doc, found), file=sys.stderr)
    return EXIT_NO if found is None else EXIT_FOUND


def cmd_gen(args) -> int:
    try:
        doc, _ = planted_instance(args.seed, args.vars, args.clauses, args.planted_k, args.allow_repeats)
    except ValueError as e:
        raise UsageError(str(e)) from None
    comment = (
        f"planted seed={args.seed} vars={args.vars} clauses={args.clauses} planted_k={args.planted_k}"
    )
    sys.stdout.write(render(doc, [comment]))
    return EXIT_FOUND


def cmd_oracle(args) -> int:
    doc = _read_doc(args.cnf)
    out = sys.stdout
    try:
        if args.what == "scs":
            if doc.annotated:
                inst = _annotated_instance(doc, 0)
                size, witness = brute_scs(inst.f, inst.l_set, inst.pivot)
                idx = sorted(inst.f.index(c) + 1 for c in witness)
            else:
                size, removed = brute_multiset_deletion(doc.clauses)
                idx = [i + 1 for i in removed]
            out.write(f"SCS {size}\n" + " ".join(map(str, idx)) + "\n")
        elif args.what == "sep":
            if not doc.annotated:
                raise UsageError("sep needs an annotated input (L lines and a pivot)")
            inst = _annotated_instance(doc, 0)
            # the separator the solver bounds: paths from ¬L to ¬pivot
            size, paths = brute_separator(inst.f, [l ^ 1 for l in inst.l_set], inst.pivot ^ 1)
            out.write(f"SEP {size} {paths}\n")
        else:
            try:
                f = build_formula(dict.fromkeys(doc.clauses))
                result = brute_swrt(f, LiteralSet(doc.annotations))
            except InvalidInstance as e:
                raise UsageError(str(e)) from None
            out.write(f"SWRT {'true' if result else 'false'}\n")
    except TooLarge as e:
        raise UsageError(f"instance too large for the oracle: {e}") from None
    return EXIT_FOUND


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="a2sat", description="Parameterized Almost 2-SAT solver.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="find at most k clauses whose deletion restores satisfiability")
    p.add_argument("--cnf", required=True, help="DIMACS file (arity <= 2, optional 'a'/'t' lines)")
    p.add_argument("-k", type=int, required=True, help="deletion budget (upper cap with --sweep)")
    p.add_argument("--verify", action="store_true", help="re-check the deletion, report on stderr")
    p.add_argument("--stats", action="store_true", help="append a 'c stats {json}' line")
    p.add_argument("--sweep", action="store_true", help="try k = 0, 1, ... and stop at the first success")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="emit a seeded random instance with a planted deletion set")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--clauses", type=int, required=True)
    p.add_argument("--planted-k", type=int, required=True)
    p.add_argument("--allow-repeats", action="store_true", help="permit repeated clauses")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="brute-force reference answers for small inputs")
    p.add_argument("what", choices=("scs", "sep", "swrt"))
    p.add_argument("--cnf", required=True)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"a2sat: error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
