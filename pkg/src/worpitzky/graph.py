"""Labeled simple graphs on ``1..n`` and their positive-root subsets.

A graph on vertices ``1..n`` determines the set of type-A positive roots
``e_i - e_j`` (``i < j``) over its edges. Roots are written as ordered
pairs ``(i, j)`` throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .config import bounds, check_bound

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Malformed edge-list or graph6 input."""


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LabeledGraph:
    """Simple graph on ``1..n``; isolated vertices are part of the graph."""

    n: int
    edges: frozenset[Edge]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")
        edges = frozenset(self.edges)
        masks = [0] * (self.n + 1)
        for e in edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i < j <= self.n):
                raise ValueError(f"edge {e} is not a pair 1 <= i < j <= {self.n}")
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adj", tuple(masks))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "LabeledGraph":
        out = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            out.add(_norm_edge(u, v))
        return cls(n, frozenset(out))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        mask = self.adj[v]
        return [u for u in self.vertices if mask >> u & 1]

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __str__(self) -> str:
        body = ", ".join(f"{i}{j}" if self.n < 10 else f"{i}-{j}" for i, j in self.sorted_edges())
        return f"G(n={self.n}; {body})"


@dataclass(frozen=True)
class RootSubset:
    """A set of positive roots of A_{n-1}, each root ``e_i - e_j`` stored as ``(i, j)``."""

    n: int
    roots: frozenset[Edge]

    def __post_init__(self) -> None:
        roots = frozenset(self.roots)
        for i, j in roots:
            if not (1 <= i < j <= self.n):
                raise ValueError(f"root {(i, j)} is not a positive root of A_{self.n - 1}")
        object.__setattr__(self, "roots", roots)

    def __contains__(self, root: object) -> bool:
        return root in self.roots

    def __iter__(self) -> Iterator[Edge]:
        return iter(sorted(self.roots))

    def __len__(self) -> int:
        return len(self.roots)


def positive_roots(n: int) -> list[Edge]:
    """All ``(i, j)`` with ``1 <= i < j <= n``, lexicographically."""
    return list(combinations(range(1, n + 1), 2))


# -- named graphs ---------------------------------------------------------


def empty_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, frozenset())


def complete_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, frozenset(positive_roots(n)))


def path_graph(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> LabeledGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return LabeledGraph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def star_graph(leaves: int) -> LabeledGraph:
    """``K_{1,leaves}`` with center 1."""
    return LabeledGraph.from_edges(leaves + 1, [(1, j) for j in range(2, leaves + 2)])


# -- operations -----------------------------------------------------------


def complement(G: LabeledGraph) -> LabeledGraph:
    return LabeledGraph(G.n, frozenset(e for e in positive_roots(G.n) if e not in G.edges))


def check_permutation(sigma: Sequence[int], n: int) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{n}")
    return sigma


def relabel(G: LabeledGraph, sigma: Sequence[int]) -> LabeledGraph:
    """Rename vertex ``i`` to ``sigma[i-1]``; each edge ``{i, j}`` becomes ``{sigma(i), sigma(j)}``."""
    sigma = check_permutation(sigma, G.n)
    return LabeledGraph.from_edges(G.n, [(sigma[i - 1], sigma[j - 1]) for i, j in G.edges])


def enumerate_labeled_graphs(n: int, max_n: int | None = None) -> Iterator[LabeledGraph]:
    """Every labeled graph on ``1..n``, indexed by the bits of ``positive_roots(n)``."""
    if n < 1:
        raise ValueError("n must be positive")
    check_bound("n", n, bounds().graph_n if max_n is None else max_n)
    pairs = positive_roots(n)
    for code in range(1 << len(pairs)):
        yield LabeledGraph(n, frozenset(p for b, p in enumerate(pairs) if code >> b & 1))


def to_root_subset(G: LabeledGraph) -> RootSubset:
    return RootSubset(G.n, G.edges)


def from_root_subset(psi: RootSubset) -> LabeledGraph:
    return LabeledGraph(psi.n, psi.roots)


# -- text formats -----------------------------------------------------------


def parse_edge_list(text: str) -> LabeledGraph:
    """Parse ``n`` on the first line followed by one ``i j`` pair per line.

    Blank lines and ``#`` comments are ignored.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line.split()))
    if not lines:
        raise GraphFormatError("empty input: expected vertex count on the first line")
    lineno, head = lines[0]
    if len(head) != 1 or not head[0].isdigit() or int(head[0]) < 1:
        raise GraphFormatError(f"line {lineno}: expected a positive vertex count, got {' '.join(head)!r}")
    n = int(head[0])
    edges = set()
    for lineno, parts in lines[1:]:
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'i j', got {' '.join(parts)!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex in {' '.join(parts)!r}") from None
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop at vertex {u}")
        for w in (u, v):
            if not 1 <= w <= n:
                raise GraphFormatError(f"line {lineno}: vertex {w} out of range 1..{n}")
        edges.add(_norm_edge(u, v))
    return LabeledGraph(n, frozenset(edges))


def to_edge_list(G: LabeledGraph) -> str:
    return "\n".join([str(G.n)] + [f"{i} {j}" for i, j in G.sorted_edges()]) + "\n"


_G6_HEADER = ">>graph6<<"


def _g6_size(n: int) -> list[int]:
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    if n <= 68719476735:
        return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    raise ValueError("graph too large for graph6")


def to_graph6(G: LabeledGraph) -> str:
    """Encode as graph6: size prefix then the upper triangle, column by column, in 6-bit groups."""
    bits = [1 if G.has_edge(i, j) else 0 for j in range(2, G.n + 1) for i in range(1, j)]
    bits += [0] * (-len(bits) % 6)
    groups = [int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    return "".join(chr(b + 63) for b in _g6_size(G.n) + groups)


def parse_graph6(text: str) -> LabeledGraph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    vals = []
    for pos, ch in enumerate(s):
        b = ord(ch) - 63
        if not 0 <= b <= 63:
            raise GraphFormatError(f"byte {ch!r} at offset {pos} is outside the graph6 range 63..126")
        vals.append(b)

    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphFormatError("truncated 36-bit graph6 size field")
        n = 0
        for b in vals[2:8]:
            n = n << 6 | b
        body = vals[8:]
    else:
        if len(vals) < 4:
            raise GraphFormatError("truncated 18-bit graph6 size field")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    if n < 1:
        raise GraphFormatError("graph6 encodes zero vertices; graphs here have n >= 1")

    nbits = n * (n - 1) // 2
    expected = -(-nbits // 6)
    if len(body) != expected:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {expected} for n={n}")
    edges = set()
    k = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.add((i, j))
            k += 1
    return LabeledGraph(n, frozenset(edges))


__all__ = [
    "Edge",
    "GraphFormatError",
    "LabeledGraph",
    "RootSubset",
    "complement",
    "complete_graph",
    "cycle_graph",
    "empty_graph",
    "enumerate_labeled_graphs",
    "from_root_subset",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "positive_roots",
    "relabel",
    "star_graph",
    "to_edge_list",
    "to_graph6",
    "to_root_subset",
]
