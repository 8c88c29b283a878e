"""Command line interface.

Subcommands: gen (build a cobweb Hasse diagram), check (acyclicity,
regularity, admissibility of the canonical chain), realize (search for
a two-chain realizer), dim (brute-force order dimension), export
(format conversion).

Exit codes: 0 success, 1 check failed, 2 malformed input or cyclic
graph, 3 invalid sequence values, and for realize: 4 not regular,
5 no admissible chain found, 6 non-transitive conjugate.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import NoReturn

from .cobweb import SequenceError, SequenceSpecError, build_cobweb, parse_sequence_spec
from .graphs import (
    Chain,
    CyclicInputError,
    Digraph,
    is_acyclic,
    is_admissible,
    is_regular,
    topological_order,
)
from .oracle import FinitePoset, TooLargeError, order_dimension
from .realizers import (
    DEFAULT_SEARCH_BUDGET,
    NoAdmissibleChain,
    NonTransitiveConjugate,
    NotRegular,
    Orderable,
    decide_orderable,
    verify_realizer,
)
from .serialization import (
    GRAPH_FORMATS,
    FormatError,
    format_vertex,
    graph_from_text,
    realizer_to_json,
    render_graph,
    verdict_to_json,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_BAD_SEQUENCE = 3
EXIT_NOT_REGULAR = 4
EXIT_NO_ADMISSIBLE = 5
EXIT_NON_TRANSITIVE = 6


class _CliError(Exception):
    """Internal: carries a message and an exit code to main()."""

    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def _fail(message: str, code: int) -> NoReturn:
    raise _CliError(message, code)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as err:
        _fail(f"cannot read {path}: {err}", EXIT_BAD_INPUT)


def _write_text(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _build_from_seq(spec: str, max_level: int | None) -> Digraph:
    if max_level is None:
        _fail("--max-level is required with --seq", EXIT_BAD_INPUT)
    try:
        sequence = parse_sequence_spec(spec)
    except SequenceSpecError as err:
        _fail(str(err), EXIT_BAD_INPUT)
    try:
        return build_cobweb(sequence, max_level).hasse
    except SequenceError as err:
        _fail(str(err), EXIT_BAD_SEQUENCE)
    except ValueError as err:
        _fail(str(err), EXIT_BAD_INPUT)


def _load_graph(args: argparse.Namespace) -> Digraph:
    if args.seq is not None:
        return _build_from_seq(args.seq, args.max_level)
    try:
        return graph_from_text(_read_text(args.input))
    except FormatError as err:
        _fail(str(err), EXIT_BAD_INPUT)


def _require_acyclic(g: Digraph) -> None:
    if not is_acyclic(g):
        _fail("input digraph contains a directed cycle", EXIT_BAD_INPUT)


def _cmd_gen(args: argparse.Namespace) -> int:
    hasse = _build_from_seq(args.sequence, args.max_level)
    _write_text(render_graph(hasse, args.format), args.output)
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    if not is_acyclic(g):
        print("acyclic: FAIL")
        _fail("input digraph contains a directed cycle", EXIT_BAD_INPUT)
    print("acyclic: PASS")
    regular = is_regular(g)
    if regular:
        print("regular: PASS")
    else:
        t, h = regular.witness
        print(f"regular: FAIL (redundant arc {format_vertex(t)} -> {format_vertex(h)})")
    chain = Chain(topological_order(g))
    admissible = is_admissible(chain, g)
    if admissible:
        print("admissible: PASS")
    else:
        triple = " ; ".join(format_vertex(v) for v in admissible.witness)
        print(f"admissible: FAIL (forbidden triple {triple})")
    return EXIT_OK if regular.ok and admissible.ok else EXIT_CHECK_FAILED


def _cmd_realize(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    _require_acyclic(g)
    verdict = decide_orderable(g, args.search_budget)
    if isinstance(verdict, Orderable):
        _write_text(realizer_to_json(verdict.realizer), args.output)
        check = verify_realizer(verdict.realizer)
        print(f"verification: {'PASS' if check else 'FAIL'}", file=sys.stderr)
        return EXIT_OK
    _write_text(verdict_to_json(verdict), args.output)
    if isinstance(verdict, NotRegular):
        t, h = verdict.witness
        print(
            f"not regular: redundant arc {format_vertex(t)} -> {format_vertex(h)}",
            file=sys.stderr,
        )
        return EXIT_NOT_REGULAR
    note = "" if verdict.exhaustive else " (search budget exhausted, inconclusive)"
    if isinstance(verdict, NoAdmissibleChain):
        print(f"no admissible chain{note}", file=sys.stderr)
        return EXIT_NO_ADMISSIBLE
    assert isinstance(verdict, NonTransitiveConjugate)
    print(f"non-transitive conjugate{note}", file=sys.stderr)
    return EXIT_NON_TRANSITIVE


def _cmd_dim(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    _require_acyclic(g)
    try:
        dim = order_dimension(FinitePoset.from_digraph(g), args.max_k)
    except TooLargeError as err:
        _fail(str(err), EXIT_BAD_INPUT)
    print(f"dimension: {dim}" if dim is not None else f"dimension: >{args.max_k}")
    return EXIT_OK


def _cmd_export(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    _write_text(render_graph(g, args.format), args.output)
    return EXIT_OK


def _add_input_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--input",
        default="-",
        help="graph file (JSON or edge list, sniffed); '-' reads stdin (default)",
    )
    parser.add_argument(
        "--seq",
        default=None,
        metavar="SEQSPEC",
        help="build a cobweb instead of reading a graph (needs --max-level)",
    )
    parser.add_argument(
        "--max-level", type=int, default=None, help="highest level, inclusive"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cobwebs",
        description="Cobweb posets, orderable DAGs and two-chain realizers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a cobweb Hasse diagram")
    gen.add_argument(
        "sequence",
        metavar="SEQSPEC",
        help="level sizes: fib, const:K, or list:a,b,c",
    )
    gen.add_argument("--max-level", type=int, required=True)
    gen.add_argument("--format", choices=GRAPH_FORMATS, default="json")
    gen.add_argument("--output", default=None, help="output file (default stdout)")
    gen.set_defaults(func=_cmd_gen)

    check = sub.add_parser(
        "check", help="report acyclicity, regularity and chain admissibility"
    )
    _add_input_options(check)
    check.set_defaults(func=_cmd_check)

    realize = sub.add_parser("realize", help="search for a two-chain realizer")
    _add_input_options(realize)
    realize.add_argument(
        "--search-budget",
        type=int,
        default=DEFAULT_SEARCH_BUDGET,
        metavar="N",
        help="max topological orders examined per phase "
        f"(default {DEFAULT_SEARCH_BUDGET})",
    )
    realize.add_argument("--output", default=None, help="output file (default stdout)")
    realize.set_defaults(func=_cmd_realize)

    dim = sub.add_parser("dim", help="brute-force order dimension (small graphs)")
    _add_input_options(dim)
    dim.add_argument("--max-k", type=int, choices=(1, 2, 3), default=3)
    dim.set_defaults(func=_cmd_dim)

    export = sub.add_parser("export", help="convert between graph formats")
    _add_input_options(export)
    export.add_argument("--format", choices=GRAPH_FORMATS, default="json")
    export.add_argument("--output", default=None, help="output file (default stdout)")
    export.set_defaults(func=_cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return err.code
    except SequenceError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_BAD_SEQUENCE
    except (FormatError, CyclicInputError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
