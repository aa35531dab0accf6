#!/usr/bin/env python3
"""Count labeled graphs per class and per compatibility verdict for n = 1..N."""

import argparse
from dataclasses import dataclass

from worpitzky import enumerate_labeled_graphs, to_root_subset
from worpitzky.compatibility import is_compatible_triples, is_root_ideal
from worpitzky.orderings import (
    is_chordal,
    is_cocomparability,
    is_comparability,
    is_interval,
    is_unit_interval,
)


@dataclass(frozen=True)
class CensusConfig:
    max_n: int = 5


COLUMNS = {
    "comparability": is_comparability,
    "cocomparability": is_cocomparability,
    "chordal": is_chordal,
    "interval": is_interval,
    "unit-interval": is_unit_interval,
    "compatible": is_compatible_triples,
    "ideal": lambda G: is_root_ideal(to_root_subset(G)),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=CensusConfig.max_n)
    cfg = CensusConfig(ap.parse_args().max_n)
    if not 1 <= cfg.max_n <= 6:
        ap.error("--max-n must be in 1..6")

    print(f"{'n':>2} {'graphs':>7} " + " ".join(f"{c:>15}" for c in COLUMNS))
    for n in range(1, cfg.max_n + 1):
        tally = dict.fromkeys(COLUMNS, 0)
        total = 0
        for G in enumerate_labeled_graphs(n):
            total += 1
            for name, pred in COLUMNS.items():
                tally[name] += pred(G)
        print(f"{n:>2} {total:>7} " + " ".join(f"{tally[c]:>15}" for c in COLUMNS), flush=True)


if __name__ == "__main__":
    main()
