#!/usr/bin/env python3
"""Alcoves of the fundamental parallelepiped: counts, ceiling counts and partition sampling."""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from worpitzky.alcoves import enumerate_alcoves_in_P, geometry, upper_closure_contains
from worpitzky.verify import on_affine_hyperplane, sample_parallelepiped_points


@dataclass(frozen=True)
class AlcoveConfig:
    max_n: int = 5
    samples: int = 1000
    seed: int = 0


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=AlcoveConfig.max_n)
    ap.add_argument("--samples", type=int, default=AlcoveConfig.samples)
    ap.add_argument("--seed", type=int, default=AlcoveConfig.seed)
    a = ap.parse_args()
    cfg = AlcoveConfig(a.max_n, a.samples, a.seed)
    rng = random.Random(cfg.seed)

    for n in range(2, cfg.max_n + 1):
        alcoves = list(enumerate_alcoves_in_P(n))
        # distribution of ceiling counts; k ceilings <-> Eulerian number
        ceilings = Counter(len(geometry(A).ceilings) for A in alcoves)
        pts = sample_parallelepiped_points(n, cfg.samples, rng)
        unique = sum(sum(upper_closure_contains(A, x) for A in alcoves) == 1 for x in pts)
        on_h = sum(map(on_affine_hyperplane, pts))
        print(
            f"n={n}: {len(alcoves)} alcoves, ceilings {dict(sorted(ceilings.items()))}, "
            f"{unique}/{len(pts)} samples in exactly one upper closure ({on_h} on hyperplanes)",
            flush=True,
        )


if __name__ == "__main__":
    main()
