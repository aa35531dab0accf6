"""Exponential brute-force checks used only for cross-validation.

Kept out of the public modules on purpose: they exist to check the
polynomial-time routines, not to replace them.
"""

from __future__ import annotations

from itertools import combinations, product

import numpy as np

from .compatibility import enumerate_decompositions
from .graph import LabeledGraph, RootSubset
from .polynomials import permutation_table


def _adjacency(G: LabeledGraph) -> np.ndarray:
    adj = np.zeros((G.n + 1, G.n + 1), dtype=bool)
    for i, j in G.edges:
        adj[i, j] = adj[j, i] = True
    return adj


def ordering_masks(G: LabeledGraph) -> dict[str, np.ndarray]:
    """Masks over all n! orderings for the umbrella-free, interval and unit interval properties."""
    P = permutation_table(G.n)
    A = _adjacency(G)
    pair = {(a, b): A[P[:, a], P[:, b]] for a, b in combinations(range(G.n), 2)}
    ok = {kind: np.ones(len(P), dtype=bool) for kind in ("umbrella", "interval", "unit")}
    for i, k, j in combinations(range(G.n), 3):
        e_ij, e_ik, e_kj = pair[i, j], pair[i, k], pair[k, j]
        ok["umbrella"] &= ~(e_ij & ~e_ik & ~e_kj)
        ok["interval"] &= ~(e_ij & ~e_ik)
        ok["unit"] &= ~(e_ij & ~(e_ik & e_kj))
    return ok


def ordering_existence(G: LabeledGraph) -> dict[str, bool]:
    return {kind: bool(mask.any()) for kind, mask in ordering_masks(G).items()}


def has_ordering(G: LabeledGraph, kind: str) -> bool:
    return ordering_existence(G)[kind]


def orderings_with(G: LabeledGraph, kind: str) -> list[tuple[int, ...]]:
    P = permutation_table(G.n)
    return [tuple(int(v) for v in row) for row in P[ordering_masks(G)[kind]]]


def has_transitive_orientation(G: LabeledGraph) -> bool:
    """Try all ``2**m`` orientations."""
    edges = sorted(G.edges)
    for flips in product((False, True), repeat=len(edges)):
        succ: dict[int, set[int]] = {v: set() for v in G.vertices}
        for (i, j), f in zip(edges, flips):
            if f:
                succ[j].add(i)
            else:
                succ[i].add(j)
        if all(succ[b] <= succ[a] for a in succ for b in succ[a]):
            return True
    return False


def strongly_compatible_by_definition(psi: RootSubset) -> bool:
    """Every decomposition of every root in ``psi`` uses some root of ``psi``."""
    for i, j in psi.roots:
        for chain in enumerate_decompositions((i, j), psi.n):
            if not any((a, b) in psi.roots for a, b in zip(chain, chain[1:])):
                return False
    return True


def has_induced_cycle(G: LabeledGraph, length: int) -> bool:
    for verts in combinations(G.vertices, length):
        sub = [(a, b) for a, b in combinations(verts, 2) if G.has_edge(a, b)]
        if len(sub) != length:
            continue
        if all(sum(1 for e in sub if v in e) == 2 for v in verts):
            # 2-regular with `length` edges on `length` vertices: a single cycle unless it splits
            seen = {verts[0]}
            stack = [verts[0]]
            while stack:
                x = stack.pop()
                for y in verts:
                    if y not in seen and G.has_edge(x, y):
                        seen.add(y)
                        stack.append(y)
            if len(seen) == length:
                return True
    return False


def is_chordal_by_cycles(G: LabeledGraph) -> bool:
    return not any(has_induced_cycle(G, k) for k in range(4, G.n + 1))
