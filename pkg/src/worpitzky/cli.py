"""Command-line front end: ``worpitzky {recognize,compat,poly,verify,alcoves}``.

Exit codes: 0 member / compatible / success, 1 non-member / not compatible,
2 usage or input error, 3 internal disagreement or failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import factorial
from typing import Optional, Sequence

from .alcoves import compatibility_failure, dump_alcoves, is_compatible_geometric
from .compatibility import is_compatible_triples, is_strongly_compatible, strong_compatibility_witness
from .config import BoundExceeded, bounds
from .graph import GraphFormatError, LabeledGraph, parse_edge_list, parse_graph6, to_graph6, to_root_subset
from .orderings import (
    find_interval_ordering,
    find_umbrella_free_ordering,
    find_unit_interval_ordering,
    perfect_elimination_ordering,
    transitive_orientation,
)
from .polynomials import a_eulerian, chromatic, graphic_eulerian, reduced_graphic_eulerian
from .verify import MAX_GEOMETRIC, MAX_VERTICES, run_all

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_FAIL = 3


class UsageError(Exception):
    pass


def _read_graph(args: argparse.Namespace) -> LabeledGraph:
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    if args.edgelist == "-":
        return parse_edge_list(sys.stdin.read())
    try:
        with open(args.edgelist, encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.edgelist}: {exc.strerror}") from None


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--edgelist", metavar="FILE", help="edge-list file ('-' for stdin): n, then 'i j' per line")
    g.add_argument("--graph6", metavar="STRING", help="graph in graph6 encoding")


def _fmt_order(order: Sequence[int]) -> str:
    return " < ".join(map(str, order))


def cmd_recognize(args: argparse.Namespace) -> int:
    G = _read_graph(args)
    witness: Optional[str] = None
    if args.graph_class == "cocomparability":
        order = find_umbrella_free_ordering(G)
        member = order is not None
        witness = order and f"umbrella-free ordering: {_fmt_order(order)}"
    elif args.graph_class == "comparability":
        orient = transitive_orientation(G)
        member = orient is not None
        witness = orient and "transitive orientation: " + " ".join(f"{u}->{v}" for u, v in sorted(orient.arcs))
    elif args.graph_class == "interval":
        order = find_interval_ordering(G)
        member = order is not None
        witness = order and f"interval ordering: {_fmt_order(order)}"
    elif args.graph_class == "unit-interval":
        order = find_unit_interval_ordering(G)
        member = order is not None
        witness = order and f"unit interval ordering: {_fmt_order(order)}"
    else:
        order = perfect_elimination_ordering(G)
        member = order is not None
        witness = order and f"perfect elimination ordering: {_fmt_order(order)}"

    if args.json:
        print(json.dumps({"class": args.graph_class, "graph6": to_graph6(G), "member": member, "witness": witness}))
    else:
        print(f"{G}: {'member' if member else 'not a member'} of {args.graph_class}")
        if witness:
            print(f"  {witness}")
    return EXIT_OK if member else EXIT_NO


def cmd_compat(args: argparse.Namespace) -> int:
    G = _read_graph(args)
    psi = to_root_subset(G)
    methods = ["triples", "chains", "geometric"] if args.method == "all" else [args.method]
    if "geometric" in methods and G.n > bounds().geometric_n:
        raise BoundExceeded(f"geometric method supports n <= {bounds().geometric_n}, got n={G.n}")
    verdicts = {}
    for m in methods:
        if m == "triples":
            verdicts[m] = is_compatible_triples(G)
        elif m == "chains":
            verdicts[m] = is_strongly_compatible(psi)
        else:
            verdicts[m] = is_compatible_geometric(psi)

    if len(set(verdicts.values())) > 1:
        print(f"DIVERGENCE on {to_graph6(G)} {G}: {verdicts}", file=sys.stderr)
        return EXIT_FAIL

    compatible = next(iter(verdicts.values()))
    details = []
    if not compatible:
        w = strong_compatibility_witness(psi)
        if w is not None:
            details.append(f"root {w[0]} has avoiding chain {' < '.join(map(str, w[1]))}")
        if "geometric" in methods:
            fail = compatibility_failure(psi)
            if fail is not None:
                A, root, m = fail
                details.append(f"alcove r={A.levels}: face on H({root}, {m}) lifts to no ceiling in the set")
    if args.json:
        print(json.dumps({"graph6": to_graph6(G), "compatible": compatible, "methods": verdicts, "details": details}))
    else:
        print(f"{G}: {'compatible' if compatible else 'not compatible'} ({', '.join(methods)})")
        for d in details:
            print(f"  {d}")
    return EXIT_OK if compatible else EXIT_NO


_POLYS = {
    "chromatic": chromatic,
    "W": graphic_eulerian,
    "F": a_eulerian,
    "Y": reduced_graphic_eulerian,
}


def cmd_poly(args: argparse.Namespace) -> int:
    G = _read_graph(args)
    p = _POLYS[args.kind](G)
    if args.json:
        print(p.to_json())
    else:
        print(p)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if not 1 <= args.max_vertices <= MAX_VERTICES:
        raise UsageError(f"--max-vertices must be between 1 and {MAX_VERTICES}")
    if not 1 <= args.geometric_max <= MAX_GEOMETRIC:
        raise UsageError(f"--geometric-max must be between 1 and {MAX_GEOMETRIC}")

    def show(res) -> None:
        if not args.json:
            status = "ok" if res.ok else f"FAILED ({len(res.failed)})"
            print(f"{res.suite:34s} checked {res.checked:7d}  {status}", flush=True)
            if res.failed:
                print(f"  smallest counterexample: {res.failed[0]}")

    results = run_all(args.max_vertices, args.geometric_max, args.seed, args.samples, progress=show)
    if args.json:
        print(json.dumps([r.to_json() for r in results], indent=1))
    else:
        n, m = args.max_vertices, args.geometric_max
        print(f"graphs on {n} vertices: {2 ** (n * (n - 1) // 2)}; alcoves at n={m}: {factorial(m - 1)}")
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def cmd_alcoves(args: argparse.Namespace) -> int:
    print(dump_alcoves(args.n))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="worpitzky", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="recognize a graph class and print a witness ordering")
    p.add_argument(
        "graph_class",
        metavar="class",
        choices=["cocomparability", "comparability", "interval", "unit-interval", "chordal"],
    )
    _add_graph_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("compat", help="decide compatibility of the graphic root subset")
    p.add_argument("method", choices=["triples", "chains", "geometric", "all"])
    _add_graph_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compat)

    p = sub.add_parser("poly", help="chromatic, graphic Eulerian (W), A-Eulerian (F) or reduced (Y) polynomial")
    p.add_argument("kind", choices=sorted(_POLYS))
    _add_graph_input(p)
    p.add_argument("--json", action="store_true", help="coefficient array, constant term first")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("verify", help="run the exhaustive cross-check suites")
    p.add_argument("--max-vertices", type=int, default=5, metavar="N")
    p.add_argument("--geometric-max", type=int, default=5, metavar="M")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--samples", type=int, default=1000, help="partition sample points per n")
    p.add_argument("--json", action="store_true", help="print the JSON report instead of the table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("alcoves", help="dump the alcoves of the fundamental parallelepiped as JSON")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_alcoves)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, UsageError, BoundExceeded, ValueError) as exc:
        print(f"worpitzky: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
