"""Alcoves of the affine type-A arrangement inside the fundamental parallelepiped.

An alcove is encoded by its Shi vector: for each positive root ``(i, j)``
the integer ``r`` with ``r - 1 < x_i - x_j < r`` on the alcove. Points live
in ``Q^n`` restricted to ``sum(x) == 0`` and the root ``(i, j)`` pairs with
``x`` as ``x_i - x_j``.

The upper closure of an alcove is treated as a half-open simplex: closed
along ceiling facets, open along the other facets. A face of the closed
simplex meets the half-open one iff it is not contained in a single
non-ceiling facet, because a polytope covered by finitely many hyperplanes
lies in one of them. Faces are therefore handled as sets of vertices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .config import bounds, check_bound
from .graph import Edge, RootSubset

Point = tuple[Fraction, ...]

CEILING = "ceiling"
LOWER = "lower"
LINEAR = "linear"


@lru_cache(maxsize=None)
def shi_pairs(n: int) -> tuple[Edge, ...]:
    """Positive roots ordered by height, then by first index: (1,2), (2,3), ..., (1,3), ..."""
    return tuple(sorted(combinations(range(1, n + 1), 2), key=lambda p: (p[1] - p[0], p[0])))


@lru_cache(maxsize=None)
def _pair_index(n: int) -> dict[Edge, int]:
    return {p: k for k, p in enumerate(shi_pairs(n))}


@dataclass(frozen=True)
class ShiAlcove:
    """Shi coordinates ``levels[k]`` for the root ``shi_pairs(n)[k]``."""

    n: int
    levels: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.levels) != self.n * (self.n - 1) // 2:
            raise ValueError(f"need {self.n * (self.n - 1) // 2} Shi coordinates for n={self.n}")

    def r(self, i: int, j: int) -> int:
        return self.levels[_pair_index(self.n)[(i, j)]]

    def as_dict(self) -> dict[Edge, int]:
        return dict(zip(shi_pairs(self.n), self.levels))

    @classmethod
    def from_dict(cls, n: int, r: dict[Edge, int]) -> "ShiAlcove":
        return cls(n, tuple(r[p] for p in shi_pairs(n)))


@dataclass(frozen=True)
class Wall:
    root: Edge
    level: int
    kind: str

    def contains(self, x: Sequence[Fraction]) -> bool:
        return pairing(self.root, x) == self.level


@dataclass(frozen=True)
class AlcoveGeometry:
    alcove: ShiAlcove
    walls: tuple[Wall, ...]
    vertices: tuple[Point, ...]

    @property
    def ceilings(self) -> tuple[Wall, ...]:
        return tuple(w for w in self.walls if w.kind == CEILING)


def pairing(root: Edge, x: Sequence[Fraction]) -> Fraction:
    i, j = root
    return x[i - 1] - x[j - 1]


def _shi_ok(n: int, get) -> bool:
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            rij = get(i, j)
            for k in range(i + 1, j):
                s = get(i, k) + get(k, j)
                if not s - 1 <= rij <= s:
                    return False
    return True


def is_admissible(alcove: ShiAlcove | dict[Edge, int], n: Optional[int] = None) -> bool:
    """Shi's criterion ``r(a) + r(b) - 1 <= r(a + b) <= r(a) + r(b)`` over all splits."""
    if isinstance(alcove, ShiAlcove):
        return _shi_ok(alcove.n, alcove.r)
    if n is None:
        n = max(j for _, j in alcove)
    return _shi_ok(n, lambda i, j: alcove[(i, j)])


def enumerate_alcoves_in_P(n: int, max_n: int | None = None) -> Iterator[ShiAlcove]:
    """All alcoves in the fundamental parallelepiped, lexicographic in ``levels``."""
    if n < 2:
        raise ValueError("alcoves need n >= 2")
    check_bound("n", n, bounds().alcove_n if max_n is None else max_n)
    pairs = shi_pairs(n)
    simple = n - 1
    levels = [1] * simple + [0] * (len(pairs) - simple)
    index = _pair_index(n)

    def fill(k: int) -> Iterator[ShiAlcove]:
        if k == len(pairs):
            yield ShiAlcove(n, tuple(levels))
            return
        i, j = pairs[k]
        sums = [levels[index[(i, m)]] + levels[index[(m, j)]] for m in range(i + 1, j)]
        for value in range(max(sums) - 1, min(sums) + 1):
            levels[k] = value
            yield from fill(k + 1)

    yield from fill(simple)


def walls(alcove: ShiAlcove) -> list[Wall]:
    """Hyperplanes ``H(root, r)`` and ``H(root, r - 1)`` that bound the alcove.

    ``H(root, r)`` is a wall iff raising that one coordinate stays admissible
    (the neighbouring alcove across it exists); likewise for lowering. The
    positivity of Shi coordinates is not enforced when lowering, so walls at
    level 0 (through the origin) are found and tagged as linear.
    """
    out = []
    n = alcove.n
    levels = list(alcove.levels)
    for k, root in enumerate(shi_pairs(n)):
        r = levels[k]
        levels[k] = r + 1
        if is_admissible(ShiAlcove(n, tuple(levels))):
            out.append(Wall(root, r, CEILING))
        levels[k] = r - 1
        if is_admissible(ShiAlcove(n, tuple(levels))):
            out.append(Wall(root, r - 1, LINEAR if r == 1 else LOWER))
        levels[k] = r
    return out


def solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gauss-Jordan elimination over the rationals; raises on a singular system."""
    size = len(matrix)
    rows = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular linear system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        p = rows[col][col]
        rows[col] = [v / p for v in rows[col]]
        for r in range(size):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return [row[-1] for row in rows]


def _hyperplane_row(n: int, root: Edge) -> list[Fraction]:
    row = [Fraction(0)] * n
    row[root[0] - 1] = Fraction(1)
    row[root[1] - 1] = Fraction(-1)
    return row


def vertices(alcove: ShiAlcove, alcove_walls: Optional[Sequence[Wall]] = None) -> list[Point]:
    """Vertex ``k`` is the point on every wall except wall ``k`` (and on ``sum(x) == 0``)."""
    ws = list(walls(alcove) if alcove_walls is None else alcove_walls)
    n = alcove.n
    if len(ws) != n:
        raise RuntimeError(f"alcove {alcove.levels} has {len(ws)} walls, expected {n}")
    out = []
    for skip in range(n):
        rows = [_hyperplane_row(n, w.root) for k, w in enumerate(ws) if k != skip]
        rhs = [Fraction(w.level) for k, w in enumerate(ws) if k != skip]
        try:
            x = solve_exact(rows + [[Fraction(1)] * n], rhs + [Fraction(0)])
        except ArithmeticError as exc:
            raise RuntimeError(f"walls of alcove {alcove.levels} are degenerate") from exc
        out.append(tuple(x))
    return out


@lru_cache(maxsize=None)
def geometry(alcove: ShiAlcove) -> AlcoveGeometry:
    ws = tuple(walls(alcove))
    return AlcoveGeometry(alcove, ws, tuple(vertices(alcove, ws)))


def barycenter(points: Sequence[Point]) -> Point:
    k = len(points)
    return tuple(sum(col, Fraction(0)) / k for col in zip(*points))


def upper_closure_contains(alcove: ShiAlcove, x: Sequence[Fraction]) -> bool:
    geo = geometry(alcove)
    for root, r in alcove.as_dict().items():
        if pairing(root, x) > r:
            return False
        if pairing(root, x) < r - 1:
            return False
    for w in geo.walls:
        if w.kind != CEILING and pairing(w.root, x) <= w.level:
            return False
    return True


def locate(x: Sequence[Fraction], n: int) -> list[ShiAlcove]:
    """Every alcove in P whose upper closure contains ``x`` (the partition says exactly one)."""
    return [A for A in enumerate_alcoves_in_P(n) if upper_closure_contains(A, x)]


def in_parallelepiped(x: Sequence[Fraction]) -> bool:
    return sum(x) == 0 and all(0 < x[i] - x[i + 1] <= 1 for i in range(len(x) - 1))


def face_vertices(geo: AlcoveGeometry, root: Edge, level: int) -> frozenset[int]:
    return frozenset(k for k, v in enumerate(geo.vertices) if pairing(root, v) == level)


def _contains_face(geo: AlcoveGeometry, wall: Wall, face: frozenset[int]) -> bool:
    return all(wall.contains(geo.vertices[k]) for k in face)


def meets_upper_closure(geo: AlcoveGeometry, face: frozenset[int]) -> bool:
    """Whether the closed face spanned by these vertices survives in the half-open simplex."""
    if not face:
        return False
    return not any(w.kind != CEILING and _contains_face(geo, w, face) for w in geo.walls)


def lifting_requirements(alcove: ShiAlcove) -> list[tuple[Edge, int, frozenset[Edge]]]:
    """For each nonempty ``A♢ ∩ H(root, m)``, the ceiling roots whose hyperplanes contain it.

    Only ``m in {r - 1, r}`` can meet the closure since ``r - 1 <= (root, x) <= r`` there.
    """
    geo = geometry(alcove)
    out = []
    for root, r in alcove.as_dict().items():
        for m in (r - 1, r):
            face = face_vertices(geo, root, m)
            if meets_upper_closure(geo, face):
                lift = frozenset(c.root for c in geo.ceilings if _contains_face(geo, c, face))
                out.append((root, m, lift))
    return out


@lru_cache(maxsize=None)
def _requirements(n: int) -> tuple[tuple[Edge, frozenset[Edge]], ...]:
    reqs = set()
    for A in enumerate_alcoves_in_P(n):
        for root, _, lift in lifting_requirements(A):
            reqs.add((root, lift))
    return tuple(sorted(reqs, key=lambda t: (t[0], sorted(t[1]))))


def compatibility_failure(psi: RootSubset, max_n: int | None = None) -> Optional[tuple[ShiAlcove, Edge, int]]:
    """First alcove, root and level where a nonempty intersection lifts to no ceiling in ``psi``."""
    n = psi.n
    if n < 2:
        return None
    check_bound("n", n, bounds().geometric_n if max_n is None else max_n)
    for A in enumerate_alcoves_in_P(n):
        for root, m, lift in lifting_requirements(A):
            if root in psi.roots and not (lift & psi.roots):
                return A, root, m
    return None


def is_compatible_geometric(psi: RootSubset, max_n: int | None = None) -> bool:
    """Compatibility decided directly from alcoves, ceilings and upper closures."""
    n = psi.n
    if n < 2:
        return True
    check_bound("n", n, bounds().geometric_n if max_n is None else max_n)
    return all(not (root in psi.roots) or bool(lift & psi.roots) for root, lift in _requirements(n))


def _simple_support(root: Edge) -> tuple[int, ...]:
    return tuple(range(root[0], root[1]))


def is_nonnegative_combination(target: Edge, generators: Sequence[Edge]) -> bool:
    """Whether ``target`` is a sum of the generators with nonnegative integer coefficients.

    Coordinates in the simple-root basis are 0/1, so each coefficient is 0 or 1.
    """
    goal = sorted(_simple_support(target))
    for size in range(1, len(generators) + 1):
        for chosen in combinations(generators, size):
            support = sorted(s for g in chosen for s in _simple_support(g))
            if support == goal:
                return True
    return False


def ceiling_lift_check(n: int, max_n: int | None = None) -> tuple[int, list[tuple[ShiAlcove, Edge, tuple[Edge, ...]]]]:
    """Count of (alcove, ceiling set, root) cases examined and the counterexamples found.

    A case is a nonempty face cut out of the upper closure by a set of
    ceilings that coincides with the face ``A♢ ∩ H(root, r_root)``.
    """
    check_bound("n", n, bounds().ceiling_lift_n if max_n is None else max_n)
    checked = 0
    bad = []
    for A in enumerate_alcoves_in_P(n):
        geo = geometry(A)
        ceilings = geo.ceilings
        root_faces = {root: face_vertices(geo, root, r) for root, r in A.as_dict().items()}
        for size in range(1, len(ceilings) + 1):
            for chosen in combinations(ceilings, size):
                face = frozenset(k for k, v in enumerate(geo.vertices) if all(c.contains(v) for c in chosen))
                if not meets_upper_closure(geo, face):
                    continue
                gens = tuple(c.root for c in chosen)
                for root, rface in root_faces.items():
                    if rface == face:
                        checked += 1
                        if not is_nonnegative_combination(root, gens):
                            bad.append((A, root, gens))
    return checked, bad


def verify_ceiling_lift(n: int) -> bool:
    checked, bad = ceiling_lift_check(n)
    return checked > 0 and not bad


def alcove_to_json(alcove: ShiAlcove) -> dict:
    geo = geometry(alcove)
    return {
        "n": alcove.n,
        "r": {f"{i},{j}": lvl for (i, j), lvl in alcove.as_dict().items()},
        "ceilings": [{"root": f"{w.root[0]},{w.root[1]}", "level": w.level} for w in geo.ceilings],
        "vertices": [[str(c) for c in v] for v in geo.vertices],
    }


def dump_alcoves(n: int) -> str:
    return json.dumps([alcove_to_json(A) for A in enumerate_alcoves_in_P(n)], indent=1)
