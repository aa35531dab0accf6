#!/usr/bin/env python3
"""Print every permutation of S_n with its rank vector, graphic descents and A-descents.

Defaults to the 4-vertex graph with edges 12, 23, then prints W, F and Y.
"""

import argparse
from dataclasses import dataclass
from itertools import permutations

from worpitzky import parse_edge_list
from worpitzky.polynomials import (
    a_descent_count,
    a_eulerian,
    graphic_descent_count,
    graphic_eulerian,
    rank_vector,
    reduced_graphic_eulerian,
)


@dataclass(frozen=True)
class TableConfig:
    edges: str = "4\n1 2\n2 3\n"
    sort_by: str = "graphic"  # or "a", "word"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--edgelist", help="edge-list file (default: 12, 23 on 4 vertices)")
    ap.add_argument("--sort-by", choices=["graphic", "a", "word"], default=TableConfig.sort_by)
    args = ap.parse_args()
    cfg = TableConfig(open(args.edgelist).read() if args.edgelist else TableConfig.edges, args.sort_by)

    G = parse_edge_list(cfg.edges)
    rows = []
    for pi in permutations(G.vertices):
        rows.append(("".join(map(str, pi)), rank_vector(pi, G), graphic_descent_count(pi, G), a_descent_count(pi, G)))
    key = {"graphic": lambda r: (r[2], r[0]), "a": lambda r: (r[3], r[0]), "word": lambda r: r[0]}[cfg.sort_by]
    print(f"{G}")
    print(f"{'pi':>8}  {'rho':<16} gdes  ades")
    for word, rho, g, a in sorted(rows, key=key):
        print(f"{word:>8}  {str(rho):<16} {g:4d}  {a:4d}")
    print(f"W = {graphic_eulerian(G)}")
    print(f"F = {a_eulerian(G)}")
    print(f"Y = {reduced_graphic_eulerian(G)}")


if __name__ == "__main__":
    main()
