"""Combinatorial deciders for compatibility of graphic root subsets.

Two independent deciders are provided and are expected to agree:

* :func:`is_compatible_triples` looks for an umbrella under the identity
  ordering (three vertices at a time);
* :func:`is_strongly_compatible` searches, for each root ``(i, j)`` in the
  set, for an increasing chain ``i = p_1 < ... < p_m = j`` whose consecutive
  pairs all avoid the set.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Optional

from .config import bounds, check_bound
from .graph import Edge, LabeledGraph, RootSubset, to_root_subset
from .orderings import VertexOrdering, find_umbrella_free_ordering, is_umbrella_free


def is_compatible_triples(G: LabeledGraph) -> bool:
    return is_umbrella_free(G, tuple(G.vertices))


def _avoiding_chain_exists(psi: RootSubset, i: int, j: int) -> bool:
    # reachability i -> j in the DAG of increasing pairs outside psi
    reach = {i}
    for q in range(i + 1, j + 1):
        if any((p, q) not in psi.roots for p in reach):
            reach.add(q)
    return j in reach


def is_strongly_compatible(psi: RootSubset) -> bool:
    # (i, j) itself is in psi, so any avoiding chain automatically has m >= 3
    return not any(_avoiding_chain_exists(psi, i, j) for i, j in psi.roots)


def strong_compatibility_witness(psi: RootSubset) -> Optional[tuple[Edge, tuple[int, ...]]]:
    """A root of ``psi`` and an increasing chain for it with no consecutive pair in ``psi``."""
    for i, j in sorted(psi.roots):
        prev: dict[int, int] = {}
        reach = [i]
        for q in range(i + 1, j + 1):
            for p in reach:
                if (p, q) not in psi.roots:
                    prev[q] = p
                    reach.append(q)
                    break
        if j in prev:
            chain = [j]
            while chain[-1] != i:
                chain.append(prev[chain[-1]])
            return (i, j), tuple(reversed(chain))
    return None


def enumerate_decompositions(root: Edge, n: int, max_n: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every increasing chain from ``i`` to ``j``, i.e. every way to write the root as a sum of positive roots.

    There are ``2**(j - i - 1)`` of them.
    """
    i, j = root
    if not 1 <= i < j <= n:
        raise ValueError(f"{root} is not a positive root of A_{n - 1}")
    check_bound("n", n, bounds().decomposition_n if max_n is None else max_n)
    inner = range(i + 1, j)
    for size in range(len(inner) + 1):
        for mid in combinations(inner, size):
            yield (i, *mid, j)


def is_root_ideal(psi: RootSubset) -> bool:
    """Downward closed: ``(i, j)`` in the set forces every ``(p, q)`` with ``i <= p < q <= j``."""
    for i, j in psi.roots:
        for p in range(i, j):
            for q in range(p + 1, j + 1):
                if (p, q) not in psi.roots:
                    return False
    return True


def find_compatible_labeling(G: LabeledGraph) -> Optional[VertexOrdering]:
    """An ordering ``v_1 < ... < v_n``; labeling ``v_k`` by ``k`` makes the graph compatible.

    Use :func:`worpitzky.orderings.ordering_to_labeling` to turn it into a
    relabeling permutation for :func:`worpitzky.graph.relabel`.
    """
    return find_umbrella_free_ordering(G)


def is_compatible(G: LabeledGraph) -> bool:
    return is_strongly_compatible(to_root_subset(G))
