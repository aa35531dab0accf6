"""Vertex-ordering recognition of cocomparability, interval, unit interval and chordal graphs.

Every ``find_*`` routine checks its witness with the matching ``is_*``
verifier before handing it back.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import LabeledGraph, check_permutation, complement

VertexOrdering = tuple[int, ...]
Arc = tuple[int, int]


@dataclass(frozen=True)
class Orientation:
    """One direction ``(u, v)`` meaning ``u -> v`` for every edge of ``graph``."""

    graph: LabeledGraph
    arcs: frozenset[Arc]

    def __post_init__(self) -> None:
        if len(self.arcs) != len(self.graph.edges):
            raise ValueError("orientation must direct every edge exactly once")
        for u, v in self.arcs:
            if (min(u, v), max(u, v)) not in self.graph.edges or (v, u) in self.arcs:
                raise ValueError(f"arc {(u, v)} does not direct a unique edge of the graph")

    def successors(self) -> dict[int, set[int]]:
        out: dict[int, set[int]] = {v: set() for v in self.graph.vertices}
        for u, v in self.arcs:
            out[u].add(v)
        return out

    def is_transitive(self) -> bool:
        succ = self.successors()
        return all(succ[b] <= succ[a] for a in succ for b in succ[a])

    def linear_extension(self) -> VertexOrdering:
        """Topological order of the arcs, smallest available vertex first."""
        succ = self.successors()
        indeg = {v: 0 for v in succ}
        for u, v in self.arcs:
            indeg[v] += 1
        heap = [v for v, d in indeg.items() if d == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            u = heapq.heappop(heap)
            order.append(u)
            for v in succ[u]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    heapq.heappush(heap, v)
        if len(order) != self.graph.n:
            raise ValueError("orientation has a directed cycle")
        return tuple(order)


def _positions(order: Sequence[int], n: int) -> VertexOrdering:
    return check_permutation(order, n)


def is_umbrella_free(G: LabeledGraph, order: Sequence[int]) -> bool:
    """No edge ``v_i v_j`` spans a ``v_k`` (``i < k < j``) adjacent to neither end."""
    v = _positions(order, G.n)
    n = G.n
    for i in range(n):
        for j in range(i + 2, n):
            if not G.has_edge(v[i], v[j]):
                continue
            for k in range(i + 1, j):
                if not (G.has_edge(v[i], v[k]) or G.has_edge(v[k], v[j])):
                    return False
    return True


def is_interval_ordering(G: LabeledGraph, order: Sequence[int]) -> bool:
    """``i < k < j`` and ``v_i v_j`` an edge imply ``v_i v_k`` is an edge."""
    v = _positions(order, G.n)
    n = G.n
    for i in range(n):
        for j in range(i + 2, n):
            if G.has_edge(v[i], v[j]) and not all(G.has_edge(v[i], v[k]) for k in range(i + 1, j)):
                return False
    return True


def is_unit_interval_ordering(G: LabeledGraph, order: Sequence[int]) -> bool:
    """``i < k < j`` and ``v_i v_j`` an edge imply both ``v_i v_k`` and ``v_k v_j`` are edges."""
    v = _positions(order, G.n)
    n = G.n
    for i in range(n):
        for j in range(i + 2, n):
            if not G.has_edge(v[i], v[j]):
                continue
            for k in range(i + 1, j):
                if not (G.has_edge(v[i], v[k]) and G.has_edge(v[k], v[j])):
                    return False
    return True


def transitive_orientation(G: LabeledGraph) -> Optional[Orientation]:
    """Transitively orient ``G`` by implication classes, or return ``None``.

    Classes are peeled off one at a time: orient an edge, close it under
    the forcing relation of the edges still unoriented, fail if the class
    forces both directions of some edge, then delete the class and repeat.
    The union of the peeled classes is transitive whenever no class fails.
    """
    nbrs: dict[int, set[int]] = {v: set(G.neighbors(v)) for v in G.vertices}
    remaining = set(G.edges)
    arcs: set[Arc] = set()
    while remaining:
        u, v = min(remaining)
        cls = {(u, v)}
        stack = [(u, v)]
        while stack:
            a, b = stack.pop()
            forced = [(a, c) for c in nbrs[a] if c != b and c not in nbrs[b]]
            forced += [(c, b) for c in nbrs[b] if c != a and c not in nbrs[a]]
            for arc in forced:
                if arc in cls:
                    continue
                if (arc[1], arc[0]) in cls:
                    return None
                cls.add(arc)
                stack.append(arc)
        for a, b in cls:
            remaining.discard((min(a, b), max(a, b)))
            nbrs[a].discard(b)
            nbrs[b].discard(a)
        arcs |= cls

    orient = Orientation(G, frozenset(arcs))
    if not orient.is_transitive():
        raise RuntimeError(f"implication-class orientation of {G} is not transitive")
    return orient


def find_umbrella_free_ordering(G: LabeledGraph) -> Optional[VertexOrdering]:
    """Linear extension of a transitive orientation of the complement, if one exists."""
    orient = transitive_orientation(complement(G))
    if orient is None:
        return None
    order = orient.linear_extension()
    if not is_umbrella_free(G, order):
        raise RuntimeError(f"linear extension {order} is not umbrella-free for {G}")
    return order


def _poset_sets(orient: Orientation) -> tuple[dict[int, int], dict[int, int]]:
    down = {v: 0 for v in orient.graph.vertices}
    up = dict(down)
    for a, b in orient.arcs:
        up[a] += 1
        down[b] += 1
    return down, up


def find_interval_ordering(G: LabeledGraph) -> Optional[VertexOrdering]:
    """Order by number of predecessors in a transitive orientation of the complement.

    For an interval graph the complement's order is an interval order, whose
    predecessor sets are nested, and sorting by their size gives the ordering.
    Otherwise the candidate fails verification and ``None`` is returned.
    """
    orient = transitive_orientation(complement(G))
    if orient is None:
        return None
    down, _ = _poset_sets(orient)
    order = tuple(sorted(G.vertices, key=lambda v: (down[v], v)))
    return order if is_interval_ordering(G, order) else None


def find_unit_interval_ordering(G: LabeledGraph) -> Optional[VertexOrdering]:
    """As :func:`find_interval_ordering`, ties broken by more successors first (semiorder)."""
    orient = transitive_orientation(complement(G))
    if orient is None:
        return None
    down, up = _poset_sets(orient)
    order = tuple(sorted(G.vertices, key=lambda v: (down[v], -up[v], v)))
    return order if is_unit_interval_ordering(G, order) else None


def maximum_cardinality_search(G: LabeledGraph) -> VertexOrdering:
    """Visit order of maximum cardinality search, smallest index on ties."""
    weight = {v: 0 for v in G.vertices}
    order = []
    while weight:
        v = max(weight, key=lambda u: (weight[u], -u))
        del weight[v]
        order.append(v)
        for u in G.neighbors(v):
            if u in weight:
                weight[u] += 1
    return tuple(order)


def is_perfect_elimination_ordering(G: LabeledGraph, order: Sequence[int]) -> bool:
    v = _positions(order, G.n)
    for i, x in enumerate(v):
        later = [y for y in v[i + 1:] if G.has_edge(x, y)]
        for a in range(len(later)):
            for b in range(a + 1, len(later)):
                if not G.has_edge(later[a], later[b]):
                    return False
    return True


def perfect_elimination_ordering(G: LabeledGraph) -> Optional[VertexOrdering]:
    order = tuple(reversed(maximum_cardinality_search(G)))
    return order if is_perfect_elimination_ordering(G, order) else None


def is_chordal(G: LabeledGraph) -> bool:
    return perfect_elimination_ordering(G) is not None


def is_comparability(G: LabeledGraph) -> bool:
    return transitive_orientation(G) is not None


def is_cocomparability(G: LabeledGraph) -> bool:
    return find_umbrella_free_ordering(G) is not None


def is_interval(G: LabeledGraph) -> bool:
    return find_interval_ordering(G) is not None


def is_unit_interval(G: LabeledGraph) -> bool:
    return find_unit_interval_ordering(G) is not None


def ordering_to_labeling(order: Sequence[int]) -> VertexOrdering:
    """The relabeling that sends ``order[k]`` to ``k + 1`` (for use with ``relabel``)."""
    sigma = [0] * len(order)
    for k, v in enumerate(order, 1):
        sigma[v - 1] = k
    return tuple(sigma)
