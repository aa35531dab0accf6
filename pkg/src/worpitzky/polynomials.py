"""Chromatic, graphic Eulerian, A-Eulerian and reduced graphic Eulerian polynomials.

Everything is exact: integer coefficients, with ``Fraction`` only inside
binomial-basis expansions. Descent statistics are tallied over a cached
table of all permutations with numpy, one column operation per position.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Iterable, Sequence, Union

import numpy as np

from .config import bounds, check_bound
from .graph import LabeledGraph, check_permutation

Number = Union[int, Fraction]


def _strip(coeffs: Iterable[Number]) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class RatPoly:
    """Dense polynomial over the rationals, constant term first."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(Fraction(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return RatPoly(tuple((a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(size)))

    def __mul__(self, other: Union["RatPoly", Number]) -> "RatPoly":
        if not isinstance(other, RatPoly):
            return RatPoly(tuple(c * other for c in self.coeffs))
        out = [Fraction(0)] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(tuple(out))

    __rmul__ = __mul__

    def __call__(self, t: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def to_int(self) -> "IntPoly":
        if any(c.denominator != 1 for c in self.coeffs):
            raise ArithmeticError(f"non-integral coefficients in {self.coeffs}")
        return IntPoly(tuple(int(c) for c in self.coeffs))


@dataclass(frozen=True)
class IntPoly:
    """Dense polynomial over the integers, constant term first."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        if any(not isinstance(c, (int, np.integer)) or isinstance(c, bool) for c in coeffs):
            raise TypeError("IntPoly coefficients must be integers")
        object.__setattr__(self, "coeffs", _strip(int(c) for c in coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPoly":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> "IntPoly":
        if not terms:
            return cls(())
        out = [0] * (max(terms) + 1)
        for k, c in terms.items():
            out[k] += c
        return cls(tuple(out))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: "IntPoly") -> "IntPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(tuple(self.coeff(k) + other.coeff(k) for k in range(size)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(c * other for c in self.coeffs))
        out = [0] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __call__(self, t: Number) -> Number:
        acc: Number = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def to_rat(self) -> RatPoly:
        return RatPoly(tuple(Fraction(c) for c in self.coeffs))

    def __str__(self) -> str:
        return format_poly(self)

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "IntPoly":
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(s, str) for s in data):
            raise ValueError("expected a JSON array of decimal strings")
        return cls(tuple(int(s) for s in data))


def format_poly(p: IntPoly, var: str = "t") -> str:
    """Conventional descending form, e.g. ``t^4 - 6t^3 + 11t^2 - 6t``."""
    terms = [(k, c) for k, c in enumerate(p.coeffs) if c]
    if not terms:
        return "0"
    parts = []
    for k, c in reversed(terms):
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


T = IntPoly((0, 1))


def falling_factorial(n: int) -> IntPoly:
    """``t (t - 1) ... (t - n + 1)``."""
    p = IntPoly((1,))
    for i in range(n):
        p = p * IntPoly((-i, 1))
    return p


def binomial_poly(shift: int, k: int) -> RatPoly:
    """``binom(t + shift, k)`` as a polynomial in ``t``."""
    p = RatPoly((Fraction(1),))
    for i in range(k):
        p = p * RatPoly((Fraction(shift - i), Fraction(1)))
    return p * Fraction(1, factorial(k))


# -- chromatic polynomial ---------------------------------------------------

_Key = tuple[int, tuple[tuple[int, int], ...]]


def _canonical_key(k: int, edges: frozenset[tuple[int, int]]) -> _Key:
    """Relabel vertices by (degree, neighbour degrees, old label), compacted to 0..k-1.

    Not a full isomorphism canonical form; the memo is correct regardless and
    merely hits more often on graphs that agree under this refinement.
    """
    deg = [0] * k
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    nbr_deg: list[list[int]] = [[] for _ in range(k)]
    for u, v in edges:
        nbr_deg[u].append(deg[v])
        nbr_deg[v].append(deg[u])
    order = sorted(range(k), key=lambda v: (deg[v], sorted(nbr_deg[v]), v))
    pos = {v: p for p, v in enumerate(order)}
    return k, tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in edges))


@lru_cache(maxsize=200_000)
def _chromatic(key: _Key) -> IntPoly:
    k, edges = key
    if not edges:
        return IntPoly.monomial(k)
    if len(edges) == k * (k - 1) // 2:
        return falling_factorial(k)
    u, v = edges[0]
    deleted = frozenset(edges[1:])
    # contract v into u, then shift labels above v down by one
    merged = set()
    for a, b in edges[1:]:
        a = u if a == v else a
        b = u if b == v else b
        if a != b:
            a = a - 1 if a > v else a
            b = b - 1 if b > v else b
            merged.add((min(a, b), max(a, b)))
    return _chromatic(_canonical_key(k, deleted)) - _chromatic(_canonical_key(k - 1, frozenset(merged)))


def chromatic(G: LabeledGraph) -> IntPoly:
    """Chromatic polynomial by deletion-contraction on the smallest edge."""
    edges = frozenset((i - 1, j - 1) for i, j in G.edges)
    return _chromatic((G.n, tuple(sorted(edges))))


@lru_cache(maxsize=32)
def _assignments(n: int, q: int) -> np.ndarray:
    """All ``q**n`` maps from vertices to colors, one row each (column ``v - 1`` is vertex ``v``)."""
    grid = np.indices((q,) * n, dtype=np.int8).reshape(n, -1).T
    grid.setflags(write=False)
    return grid


def count_colorings(G: LabeledGraph, q: int) -> int:
    """Number of proper colorings with ``q`` colors, by checking every assignment."""
    if q <= 0:
        return 0
    rows = _assignments(G.n, q)
    ok = np.ones(len(rows), dtype=bool)
    for i, j in G.edges:
        ok &= rows[:, i - 1] != rows[:, j - 1]
    return int(ok.sum())


def chromatic_by_interpolation(G: LabeledGraph) -> IntPoly:
    """Count colorings at ``q = 0..n`` and expand in the falling-factorial basis."""
    n = G.n
    values = [count_colorings(G, q) for q in range(n + 1)]
    # forward differences at 0 give the falling-factorial coefficients times k!
    p = IntPoly(())
    diffs = values[:]
    for k in range(n + 1):
        a, rem = divmod(diffs[0], factorial(k))
        if rem:
            raise ArithmeticError("coloring counts are not a polynomial sequence")
        p = p + falling_factorial(k) * a
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
    return p


# -- permutation statistics -------------------------------------------------


def rank_vector(pi: Sequence[int], G: LabeledGraph) -> tuple[int, ...]:
    """Length of the longest chain of adjacent values ending at each position of ``pi``."""
    pi = check_permutation(pi, G.n)
    rho: list[int] = []
    for i, v in enumerate(pi):
        best = 0
        for j in range(i):
            if G.has_edge(pi[j], v) and rho[j] > best:
                best = rho[j]
        rho.append(best + 1)
    return tuple(rho)


def graphic_descent_count(pi: Sequence[int], G: LabeledGraph) -> int:
    rho = rank_vector(pi, G)
    pi = tuple(pi)
    return sum(
        1
        for i in range(len(pi) - 1)
        if rho[i] > rho[i + 1] or (rho[i] == rho[i + 1] and pi[i] > pi[i + 1])
    )


def a_descent_count(pi: Sequence[int], G: LabeledGraph) -> int:
    """Cyclic descents ``pi_i > pi_{i+1}`` (indices mod n) whose two values are non-adjacent in ``G``."""
    pi = check_permutation(pi, G.n)
    n = len(pi)
    if n == 1:
        return 0
    return sum(1 for i in range(n) if pi[i] > pi[(i + 1) % n] and not G.has_edge(pi[i], pi[(i + 1) % n]))


@lru_cache(maxsize=16)
def permutation_table(n: int, first: int = 0) -> np.ndarray:
    """All permutations of ``1..n`` as rows (lexicographic); ``first`` pins the first entry."""
    if first:
        rest = [v for v in range(1, n + 1) if v != first]
        rows = [(first, *p) for p in permutations(rest)]
    else:
        rows = list(permutations(range(1, n + 1)))
    table = np.array(rows, dtype=np.int8).reshape(len(rows), n)
    table.setflags(write=False)
    return table


def _adjacency(G: LabeledGraph) -> np.ndarray:
    adj = np.zeros((G.n + 1, G.n + 1), dtype=bool)
    for i, j in G.edges:
        adj[i, j] = adj[j, i] = True
    return adj


def _check_perm_bound(n: int) -> None:
    check_bound("n", n, bounds().perm_n)


def graphic_descent_counts(G: LabeledGraph, table: np.ndarray | None = None) -> np.ndarray:
    """Graphic descents of every row of ``table`` (all of S_n by default)."""
    n = G.n
    P = permutation_table(n) if table is None else table
    adj = _adjacency(G)
    rank = np.ones(P.shape, dtype=np.int16)
    for i in range(1, n):
        col = P[:, i]
        best = np.zeros(len(P), dtype=np.int16)
        for j in range(i):
            best = np.maximum(best, np.where(adj[P[:, j], col], rank[:, j], 0))
        rank[:, i] = best + 1
    left, right = rank[:, :-1], rank[:, 1:]
    desc = (left > right) | ((left == right) & (P[:, :-1] > P[:, 1:]))
    return desc.sum(axis=1)


def a_descent_counts(G: LabeledGraph, table: np.ndarray | None = None) -> np.ndarray:
    n = G.n
    P = permutation_table(n) if table is None else table
    if n == 1:
        return np.zeros(len(P), dtype=np.int64)
    adj = _adjacency(G)
    nxt = np.roll(P, -1, axis=1)
    return ((P > nxt) & ~adj[P, nxt]).sum(axis=1)


def _tally(descents: np.ndarray, n: int) -> list[int]:
    """Coefficient ``k`` counts rows with exactly ``n - k`` descents."""
    hist = np.bincount(descents.astype(np.int64), minlength=n + 1)
    coeffs = [0] * (n + 1)
    for d, count in enumerate(hist):
        if count:
            if d > n:
                raise RuntimeError(f"{d} descents exceed n={n}")
            coeffs[n - d] = int(count)
    return coeffs


def graphic_eulerian(G: LabeledGraph) -> IntPoly:
    """W_G: coefficient of ``t^k`` counts permutations with ``n - k`` graphic descents."""
    _check_perm_bound(G.n)
    return IntPoly(tuple(_tally(graphic_descent_counts(G), G.n)))


def a_eulerian(G: LabeledGraph) -> IntPoly:
    """F_G over the ``(n-1)!`` permutations starting with ``n``."""
    _check_perm_bound(G.n)
    table = permutation_table(G.n, first=G.n)
    coeffs = _tally(a_descent_counts(G, table), G.n)
    if coeffs[0]:
        raise RuntimeError("f_0 must vanish")
    return IntPoly(tuple(coeffs))


def a_eulerian_full(G: LabeledGraph) -> IntPoly:
    """F_G from all of S_n, dividing each count by ``n``."""
    _check_perm_bound(G.n)
    n = G.n
    out = []
    for c in _tally(a_descent_counts(G), n):
        q, rem = divmod(c, n)
        if rem:
            raise ArithmeticError(f"A-descent count {c} is not divisible by n={n}")
        out.append(q)
    return IntPoly(tuple(out))


# -- conversions between the polynomials -------------------------------------


def reduced_eulerian_series(c: IntPoly, n: int) -> IntPoly:
    """Y from ``(1 - t)^n * sum_{q=1}^{n} (c(q)/q) t^q``, truncated at degree ``n``.

    Terms with ``q > n`` only contribute to degrees above ``n``.
    """
    series = [0] * (n + 1)
    for q in range(1, n + 1):
        val, rem = divmod(c(q), q)
        if rem:
            raise ArithmeticError(f"c({q}) = {c(q)} is not divisible by {q}")
        series[q] = val
    factor = IntPoly((1,))
    for _ in range(n):
        factor = factor * IntPoly((1, -1))
    prod = factor * IntPoly(tuple(series))
    return IntPoly(prod.coeffs[: n + 1])


def reduced_eulerian_from_w(W: IntPoly, n: int) -> IntPoly:
    """Invert ``w_k = k y_k + (n - k + 1) y_{k-1}`` with ``y_0 = 0``."""
    if W.degree > n:
        raise ValueError(f"deg W = {W.degree} exceeds n = {n}")
    y = [0] * (n + 1)
    for k in range(1, n + 1):
        num = W.coeff(k) - (n - k + 1) * y[k - 1]
        val, rem = divmod(num, k)
        if rem:
            raise ArithmeticError(f"y_{k} = {num}/{k} is not an integer")
        y[k] = val
    return IntPoly(tuple(y))


def reduced_graphic_eulerian(G: LabeledGraph, cross_check: bool = True) -> IntPoly:
    """Y_G by the series route; also by inverting from W_G when ``n`` allows enumeration."""
    y = reduced_eulerian_series(chromatic(G), G.n)
    if cross_check and G.n <= bounds().perm_n:
        other = reduced_eulerian_from_w(graphic_eulerian(G), G.n)
        if other != y:
            raise RuntimeError(f"Y_G routes disagree for {G}: {y} vs {other}")
    return y


def chromatic_from_w(W: IntPoly, n: int) -> IntPoly:
    """``sum_k w_k binom(t + n - k, n)``."""
    if W.degree > n:
        raise ValueError(f"deg W = {W.degree} exceeds n = {n}")
    acc = RatPoly(())
    for k, w in enumerate(W.coeffs):
        if w:
            acc = acc + binomial_poly(n - k, n) * w
    return acc.to_int()


def chromatic_from_f(F: IntPoly, n: int) -> IntPoly:
    """``t * sum_k f_k binom(t + n - 1 - k, n - 1)``."""
    if F.degree > n:
        raise ValueError(f"deg F = {F.degree} exceeds n = {n}")
    acc = RatPoly(())
    for k, f in enumerate(F.coeffs):
        if f:
            acc = acc + binomial_poly(n - 1 - k, n - 1) * f
    return (acc * RatPoly((Fraction(0), Fraction(1)))).to_int()


def eulerian_recurrence_holds(W: IntPoly, F: IntPoly, n: int) -> bool:
    """``w_k == k f_k + (n - k + 1) f_{k-1}`` for ``1 <= k <= n``."""
    if F.coeff(0) != 0:
        raise ValueError("F must vanish at 0")
    return all(W.coeff(k) == k * F.coeff(k) + (n - k + 1) * F.coeff(k - 1) for k in range(1, n + 1))


def eulerian_numbers(n: int) -> IntPoly:
    """Classical Eulerian polynomial ``sum_k A(n, k) t^k`` via ``A(n,k) = k A(n-1,k) + (n-k+1) A(n-1,k-1)``.

    ``A(n, k)`` counts permutations of ``n`` with ``k - 1`` descents; ``A(0, 0) = 1``.
    """
    row = [1]
    for m in range(1, n + 1):
        new = [0] * (m + 1)
        for k in range(1, m + 1):
            new[k] = k * (row[k] if k < len(row) else 0) + (m - k + 1) * row[k - 1]
        row = new
    return IntPoly(tuple(row))
