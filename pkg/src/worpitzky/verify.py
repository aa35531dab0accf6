"""Exhaustive cross-checks of the recognition, compatibility and polynomial routines.

Each suite counts the cases it examined and collects witnesses for any
failure. Graphs are visited in increasing ``n`` and then in enumeration
order, so the first witness of a suite is a smallest counterexample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Optional

from . import _oracles
from .alcoves import (
    CEILING,
    ceiling_lift_check,
    enumerate_alcoves_in_P,
    geometry,
    in_parallelepiped,
    is_compatible_geometric,
    upper_closure_contains,
)
from .compatibility import is_compatible_triples, is_root_ideal, is_strongly_compatible
from .graph import (
    LabeledGraph,
    RootSubset,
    complement,
    enumerate_labeled_graphs,
    parse_graph6,
    positive_roots,
    relabel,
    to_graph6,
    to_root_subset,
)
from .orderings import (
    find_interval_ordering,
    find_umbrella_free_ordering,
    find_unit_interval_ordering,
    is_chordal,
    is_interval_ordering,
    is_umbrella_free,
    is_unit_interval_ordering,
    transitive_orientation,
)
from .polynomials import (
    a_eulerian,
    a_eulerian_full,
    chromatic,
    chromatic_by_interpolation,
    chromatic_from_f,
    chromatic_from_w,
    eulerian_recurrence_holds,
    graphic_eulerian,
    reduced_eulerian_from_w,
    reduced_eulerian_series,
)

MAX_VERTICES = 6
MAX_GEOMETRIC = 5


@dataclass
class SuiteResult:
    suite: str
    checked: int = 0
    failed: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failed

    def check(self, cond: bool, witness: Callable[[], str] | str) -> None:
        self.checked += 1
        if not cond:
            self.failed.append(witness() if callable(witness) else witness)

    def to_json(self) -> dict:
        return {"suite": self.suite, "checked": self.checked, "failed": list(self.failed)}


def _g6(G: LabeledGraph) -> str:
    return f"{to_graph6(G)} {G}"


def graph_format_suite(max_n: int) -> list[SuiteResult]:
    rt = SuiteResult("graph6-roundtrip")
    comp = SuiteResult("complement")
    for n in range(1, max_n + 1):
        total = n * (n - 1) // 2
        for G in enumerate_labeled_graphs(n):
            rt.check(parse_graph6(to_graph6(G)) == G, lambda: _g6(G))
            H = complement(G)
            comp.check(len(G.edges) + len(H.edges) == total and complement(H) == G, lambda: _g6(G))
    return [rt, comp]


def ordering_suites(max_n: int) -> list[SuiteResult]:
    """Production recognizers against transitive orientation and the n! ordering search."""
    co = SuiteResult("cocomparability")
    iv = SuiteResult("interval")
    ui = SuiteResult("unit-interval")
    for n in range(1, max_n + 1):
        for G in enumerate_labeled_graphs(n):
            brute = _oracles.ordering_existence(G)
            o_co = find_umbrella_free_ordering(G)
            o_iv = find_interval_ordering(G)
            o_ui = find_unit_interval_ordering(G)
            has_to = transitive_orientation(complement(G)) is not None
            co.check(
                (o_co is not None) == has_to == brute["umbrella"]
                and (o_co is None or is_umbrella_free(G, o_co)),
                lambda: _g6(G),
            )
            iv.check(
                (o_iv is not None) == brute["interval"] == (is_chordal(G) and o_co is not None)
                and (o_iv is None or is_interval_ordering(G, o_iv)),
                lambda: _g6(G),
            )
            ui.check(
                (o_ui is not None) == brute["unit"]
                and (o_ui is None or (is_unit_interval_ordering(G, o_ui) and o_iv is not None)),
                lambda: _g6(G),
            )
    return [co, iv, ui]


def compatibility_suites(max_n: int, definitional_n: int = 5) -> list[SuiteResult]:
    deciders = SuiteResult("compatibility-deciders")
    definition = SuiteResult("strong-compatibility-definition")
    ideal = SuiteResult("ideal")
    for n in range(1, max_n + 1):
        for G in enumerate_labeled_graphs(n):
            psi = to_root_subset(G)
            sc = is_strongly_compatible(psi)
            deciders.check(is_compatible_triples(G) == sc, lambda: _g6(G))
            if n <= definitional_n:
                definition.check(_oracles.strongly_compatible_by_definition(psi) == sc, lambda: _g6(G))
            identity = tuple(G.vertices)
            is_ideal = is_root_ideal(psi)
            ideal.check(
                (not is_ideal or (sc and is_compatible_triples(G)))
                and is_ideal == is_unit_interval_ordering(G, identity),
                lambda: _g6(G),
            )
    return [deciders, definition, ideal]


def geometric_suite(max_n: int) -> SuiteResult:
    """Compatibility from alcoves against strong compatibility, for every root subset."""
    res = SuiteResult("geometric-oracle")
    for n in range(1, max_n + 1):
        for G in enumerate_labeled_graphs(n, max_n=max_n):
            psi = to_root_subset(G)
            res.check(is_compatible_geometric(psi) == is_strongly_compatible(psi), lambda: _g6(G))
    return res


def sample_parallelepiped_points(n: int, count: int, rng: random.Random) -> list[tuple[Fraction, ...]]:
    """Rational points with ``0 < x_i - x_{i+1} <= 1`` and ``sum(x) == 0``.

    Even-indexed samples use denominators 1..6, which puts many of them on
    affine hyperplanes, including the top faces of the parallelepiped;
    odd-indexed ones use a large prime denominator.
    """
    points = []
    for s in range(count):
        if s % 2 == 0:
            gaps = []
            for _ in range(n - 1):
                d = rng.randint(1, 6)
                gaps.append(Fraction(rng.randint(1, d), d))
        else:
            gaps = [Fraction(rng.randint(1, 9973), 9973) for _ in range(n - 1)]
        x = [Fraction(0)]
        for g in gaps:
            x.append(x[-1] - g)
        shift = sum(x) / n
        points.append(tuple(v - shift for v in x))
    return points


def on_affine_hyperplane(x: tuple[Fraction, ...]) -> bool:
    return any((x[i - 1] - x[j - 1]).denominator == 1 for i, j in positive_roots(len(x)))


def alcove_suites(max_n: int, seed: int, samples: int = 1000, count_n: Optional[int] = None) -> list[SuiteResult]:
    counts = SuiteResult("alcove-count")
    shape = SuiteResult("alcove-walls")
    part = SuiteResult("worpitzky-partition")
    lift = SuiteResult("ceiling-lift")
    rng = random.Random(seed)
    for n in range(2, (count_n or max_n) + 1):
        alcoves = list(enumerate_alcoves_in_P(n))
        counts.check(len(alcoves) == factorial(n - 1), f"n={n}: {len(alcoves)} alcoves")
        if n > max_n:
            continue
        for A in alcoves:
            geo = geometry(A)
            ok = len(geo.walls) == n and len(geo.vertices) == n
            ok = ok and all(sum(w.contains(v) for w in geo.walls) == n - 1 for v in geo.vertices)
            ok = ok and all(
                (w.kind == CEILING) == (w.level >= 1 and w.level == A.r(*w.root)) for w in geo.walls
            )
            shape.check(ok, f"n={n} r={A.levels}")
        for x in sample_parallelepiped_points(n, samples, rng):
            hits = [A for A in alcoves if upper_closure_contains(A, x)]
            part.check(in_parallelepiped(x) and len(hits) == 1, f"n={n} x={[str(c) for c in x]} hits={len(hits)}")
        checked, bad = ceiling_lift_check(n)
        lift.checked += checked
        lift.failed += [f"n={n} r={A.levels} root={root} ceilings={gens}" for A, root, gens in bad]
    return [counts, shape, part, lift]


def polynomial_suites(max_n: int, seed: int) -> list[SuiteResult]:
    sums = SuiteResult("eulerian-sums")
    chrom = SuiteResult("chromatic-oracle")
    from_w = SuiteResult("chromatic-from-W")
    six = SuiteResult("six-way-equivalence")
    routes = SuiteResult("reduced-routes")
    shift = SuiteResult("cyclic-shift")
    invariance = SuiteResult("labeling-invariance")
    rng = random.Random(seed)
    for n in range(1, max_n + 1):
        for G in enumerate_labeled_graphs(n):
            W = graphic_eulerian(G)
            F = a_eulerian(G)
            c = chromatic(G)
            sums.check(sum(W.coeffs) == factorial(n) and sum(F.coeffs) == factorial(n - 1), lambda: _g6(G))
            chrom.check(c == chromatic_by_interpolation(G), lambda: _g6(G))
            from_w.check(chromatic_from_w(W, n) == c, lambda: _g6(G))
            y_series = reduced_eulerian_series(c, n)
            y_rec = reduced_eulerian_from_w(W, n)
            routes.check(y_series == y_rec and all(v >= 0 for v in y_series.coeffs), lambda: _g6(G))
            shift.check(F == a_eulerian_full(G), lambda: _g6(G))
            statements = [
                is_compatible_triples(G),
                is_strongly_compatible(to_root_subset(G)),
                chromatic_from_f(F, n) == c,
                F == y_series,
                eulerian_recurrence_holds(W, F, n),
            ]
            six.check(len(set(statements)) == 1, lambda: f"{_g6(G)} {statements}")
            sigma = list(G.vertices)
            rng.shuffle(sigma)
            H = relabel(G, sigma)
            invariance.check(
                graphic_eulerian(H) == W and reduced_eulerian_series(chromatic(H), n) == y_series,
                lambda: f"{_g6(G)} sigma={sigma}",
            )
    return [sums, chrom, from_w, six, routes, shift, invariance]


def run_all(
    max_vertices: int = 5,
    geometric_max: int = 5,
    seed: int = 0,
    samples: int = 1000,
    progress: Optional[Callable[[SuiteResult], None]] = None,
) -> list[SuiteResult]:
    if not 1 <= max_vertices <= MAX_VERTICES:
        raise ValueError(f"--max-vertices must be in 1..{MAX_VERTICES}")
    if not 1 <= geometric_max <= MAX_GEOMETRIC:
        raise ValueError(f"--geometric-max must be in 1..{MAX_GEOMETRIC}")
    steps: list[Callable[[], Iterable[SuiteResult] | SuiteResult]] = [
        lambda: graph_format_suite(max_vertices),
        lambda: ordering_suites(max_vertices),
        lambda: compatibility_suites(max_vertices),
        lambda: geometric_suite(geometric_max),
        lambda: alcove_suites(geometric_max, seed, samples),
        lambda: polynomial_suites(max_vertices, seed),
    ]
    results: list[SuiteResult] = []
    for step in steps:
        out = step()
        for res in [out] if isinstance(out, SuiteResult) else out:
            results.append(res)
            if progress is not None:
                progress(res)
    return results


__all__ = ["SuiteResult", "run_all", "sample_parallelepiped_points", "on_affine_hyperplane"]
