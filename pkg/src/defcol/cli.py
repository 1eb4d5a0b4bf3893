"""Command-line front end.

Exit codes: 0 success or valid, 1 invalid colouring (or no factor), 2 usage,
I/O or parse error.  All output is line-oriented text on stdout.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import bounds, constructions
from .bounds import exact_chi, gamma_d, lower_bound_trivial, upper_bound_degree, upper_bound_multiplicity, verify_colouring
from .colouring import parse_certificate, serialize_certificate
from .defective import colour_defective
from .errors import GraphFormatError, PreconditionError
from .factors import f_factor
from .graph import Multigraph, parse_graph, serialize_graph

EXIT_OK, EXIT_INVALID, EXIT_ERROR = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path: str) -> Multigraph:
    return parse_graph(_read(path))


def cmd_colour(args: argparse.Namespace) -> int:
    g = _load(args.path)
    if args.emit_factor is not None:
        factor = f_factor(g, [args.emit_factor] * g.n)
        if factor is None:
            print("c no factor")
            return EXIT_INVALID
        print(factor.serialize())
        return EXIT_OK
    colouring = colour_defective(g, args.d)
    sys.stdout.write(serialize_certificate(colouring, args.d))
    if args.verify:
        report = verify_colouring(g, colouring, args.d)
        # comment lines keep the certificate parseable
        for line in report.lines():
            print(f"c {line}")
        if not report.valid:
            return EXIT_INVALID
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load(args.graph)
    colours, declared_k, declared_d = parse_certificate(_read(args.certificate), g)
    d = declared_d if args.d is None else args.d
    report = verify_colouring(g, colours, d)
    for line in report.lines():
        print(line)
    if report.colours_used > declared_k:
        print(f"mismatch declared {declared_k} used {report.colours_used}")
        return EXIT_INVALID
    return EXIT_OK if report.valid else EXIT_INVALID


def bound_table(g: Multigraph, d: int, oracle_cutoff: int = bounds.ORACLE_CUTOFF) -> list[tuple[str, int]]:
    """Rows of the ``bounds`` table in their fixed order.

    ``gamma_d`` is left out above the exhaustive vertex cutoff and ``exact``
    above ``oracle_cutoff`` edges.
    """
    rows = [("trivial", lower_bound_trivial(g, d))]
    if sum(1 for x in g.degrees if x) <= bounds.GAMMA_CUTOFF:
        rows.append(("gamma_d", gamma_d(g, d)))
    rows.append(("mult_upper", upper_bound_multiplicity(g, d)))
    rows.append(("degree_upper", upper_bound_degree(g.max_degree, d)))
    if g.m <= oracle_cutoff:
        rows.append(("exact", exact_chi(g, d, cutoff=oracle_cutoff)))
    return rows


def cmd_bounds(args: argparse.Namespace) -> int:
    g = _load(args.path)
    for name, value in bound_table(g, args.d, args.oracle_cutoff):
        print(f"{name} {value}")
    return EXIT_OK


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") if len(n) > 1 else "-" + n for n in missing)
        raise PreconditionError(f"family {args.family!r} needs {flags}")


def generate(args: argparse.Namespace) -> Multigraph:
    family = args.family
    if family == "shannon":
        _need(args, "k")
        return constructions.shannon_graph(args.k)
    if family == "gadget":
        _need(args, "k", "d")
        return constructions.gadget_G(args.k, args.d)
    if family == "reduction":
        # the reduction of the complete graph K_{k+1}, which is k-regular
        _need(args, "k", "d")
        return constructions.np_reduction(constructions.complete_graph(args.k + 1), args.d)
    if family == "goldberg":
        return constructions.goldberg_counterexample()
    _need(args, "n", "delta")
    return constructions.random_regular_multigraph(args.n, args.delta, args.seed)


def cmd_generate(args: argparse.Namespace) -> int:
    sys.stdout.write(serialize_graph(generate(args)))
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    sys.stdout.write(serialize_graph(constructions.np_reduction(_load(args.path), args.d)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="defcol", description="Defective edge colouring of multigraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("colour", help="print a colouring certificate")
    p.add_argument("path", help="graph file, or - for stdin")
    p.add_argument("-d", type=int, required=True, help="defect")
    p.add_argument("--verify", action="store_true", help="append the verification report as comments")
    p.add_argument("--emit-factor", type=int, metavar="K", help="print a K-factor instead of a colouring")
    p.set_defaults(func=cmd_colour)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.add_argument("-d", type=int, help="defect (default: the certificate's)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="print lower and upper bounds")
    p.add_argument("path")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--oracle-cutoff", type=int, default=bounds.ORACLE_CUTOFF, metavar="M",
                   help="largest edge count for the exact oracle")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("generate", help="print a graph from a named family")
    p.add_argument("family", choices=["shannon", "gadget", "reduction", "goldberg", "random"])
    p.add_argument("-k", type=int)
    p.add_argument("-d", type=int)
    p.add_argument("-n", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("reduce", help="print the hardness reduction of a regular simple graph")
    p.add_argument("path")
    p.add_argument("-d", type=int, required=True)
    p.set_defaults(func=cmd_reduce)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
