"""Acceptance gate: one test per criterion, each under its stated time budget.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import random
from itertools import permutations
from math import factorial

import pytest

from conftest import time_limit
from worpitzky import _oracles
from worpitzky.alcoves import (
    enumerate_alcoves_in_P,
    geometry,
    in_parallelepiped,
    is_compatible_geometric,
    upper_closure_contains,
    verify_ceiling_lift,
)
from worpitzky.compatibility import is_compatible_triples, is_root_ideal, is_strongly_compatible
from worpitzky.graph import (
    LabeledGraph,
    RootSubset,
    complete_graph,
    empty_graph,
    enumerate_labeled_graphs,
    positive_roots,
    star_graph,
    to_root_subset,
)
from worpitzky.orderings import (
    find_interval_ordering,
    find_umbrella_free_ordering,
    find_unit_interval_ordering,
    is_chordal,
    is_unit_interval_ordering,
)
from worpitzky.polynomials import (
    IntPoly,
    a_descent_count,
    a_eulerian,
    a_eulerian_full,
    chromatic,
    chromatic_from_f,
    chromatic_from_w,
    eulerian_numbers,
    eulerian_recurrence_holds,
    falling_factorial,
    graphic_descent_count,
    graphic_eulerian,
    reduced_eulerian_series,
)
from worpitzky.verify import sample_parallelepiped_points

G = LabeledGraph.from_edges(4, [(1, 2), (2, 3)])
G_PRIME = LabeledGraph.from_edges(4, [(1, 4), (3, 4)])
CLAW = star_graph(3)


def _word(pi):
    return "".join(map(str, pi))


@pytest.mark.acceptance(1, "F_G = 2t^2 + 4t^3 by both enumeration routes")
def test_01_f_example():
    with time_limit(1):
        assert a_eulerian(G) == IntPoly((0, 0, 2, 4))
        assert a_eulerian_full(G) == IntPoly((0, 0, 2, 4))


@pytest.mark.acceptance(2, "S_4 reclassified by A- and graphic descents; W_G = 4t^2 + 16t^3 + 4t^4")
def test_02_table():
    with time_limit(1):
        perms = list(permutations(range(1, 5)))
        a = {_word(p): a_descent_count(p, G) for p in perms}
        g = {_word(p): graphic_descent_count(p, G) for p in perms}
        assert sorted(a.values()).count(2) == 8 and sorted(a.values()).count(1) == 16
        assert {w for w, d in g.items() if d == 2} == {"4312", "3124", "4231", "2314"}
        assert {w for w, d in g.items() if d == 0} == {"1423", "1342", "3421", "2413"}
        assert graphic_eulerian(G) == IntPoly((0, 0, 4, 16, 4))


@pytest.mark.acceptance(3, "G, G' and K_{1,3} verdicts agree across triples, chains, geometry")
def test_03_verdicts():
    with time_limit(5):
        for graph, expected in [(G, True), (G_PRIME, False), (CLAW, True)]:
            psi = to_root_subset(graph)
            assert is_compatible_triples(graph) is expected
            assert is_strongly_compatible(psi) is expected
            assert is_compatible_geometric(psi) is expected


@pytest.mark.acceptance(4, "six-way equivalence on all 1024 labeled graphs with 5 vertices")
def test_04_six_way():
    with time_limit(120):
        bad = []
        for graph in enumerate_labeled_graphs(5):
            F, c = a_eulerian(graph), chromatic(graph)
            statements = {
                is_compatible_triples(graph),
                is_strongly_compatible(to_root_subset(graph)),
                chromatic_from_f(F, 5) == c,
                F == reduced_eulerian_series(c, 5),
                eulerian_recurrence_holds(graphic_eulerian(graph), F, 5),
            }
            if len(statements) != 1:
                bad.append(graph)
        assert not bad


@pytest.mark.acceptance(5, "geometric compatibility = strong compatibility for all 2^10 subsets at n=5")
def test_05_geometric_oracle():
    with time_limit(600):
        roots = positive_roots(5)
        bad = []
        for mask in range(1 << len(roots)):
            psi = RootSubset(5, frozenset(r for k, r in enumerate(roots) if mask >> k & 1))
            if is_compatible_geometric(psi) != is_strongly_compatible(psi):
                bad.append(psi)
        assert not bad


@pytest.mark.acceptance(6, "chromatic polynomial from W in the binomial basis, all graphs n<=5")
def test_06_chromatic_from_w():
    with time_limit(120):
        for n in range(1, 6):
            for graph in enumerate_labeled_graphs(n):
                assert chromatic_from_w(graphic_eulerian(graph), n) == chromatic(graph), graph


@pytest.mark.acceptance(7, "ideals pass every compatibility check; ideal iff identity is unit interval")
def test_07_ideals():
    with time_limit(60):
        ideals = 0
        for n in range(1, 6):
            for graph in enumerate_labeled_graphs(n):
                psi = to_root_subset(graph)
                ideal = is_root_ideal(psi)
                assert ideal == is_unit_interval_ordering(graph, tuple(graph.vertices)), graph
                if ideal:
                    ideals += 1
                    assert is_compatible_triples(graph) and is_strongly_compatible(psi)
                    assert is_compatible_geometric(psi)
        # Catalan numbers count the ideals of the type-A root poset
        assert ideals == 1 + 2 + 5 + 14 + 42


@pytest.mark.acceptance(8, "alcove counts, walls/vertices, partition sampling, ceiling lift")
def test_08_alcoves():
    with time_limit(300):
        for n in range(2, 8):
            assert sum(1 for _ in enumerate_alcoves_in_P(n)) == factorial(n - 1)
        rng = random.Random(2024)
        for n in range(2, 6):
            alcoves = list(enumerate_alcoves_in_P(n))
            for A in alcoves:
                geo = geometry(A)
                assert len(geo.walls) == n and len(geo.vertices) == n
            for x in sample_parallelepiped_points(n, 1000, rng):
                assert in_parallelepiped(x)
                assert sum(upper_closure_contains(A, x) for A in alcoves) == 1
            assert verify_ceiling_lift(n)


@pytest.mark.acceptance(9, "interval = chordal and cocomparability for n<=6; K_{1,3} interval, not unit")
def test_09_classes():
    with time_limit(300):
        for n in range(1, 7):
            for graph in enumerate_labeled_graphs(n):
                interval = find_interval_ordering(graph) is not None
                assert interval == (is_chordal(graph) and find_umbrella_free_ordering(graph) is not None), graph
                if find_unit_interval_ordering(graph) is not None:
                    assert interval
                if n <= 5:
                    brute = _oracles.ordering_existence(graph)
                    assert interval == brute["interval"]
                    assert is_chordal(graph) == _oracles.is_chordal_by_cycles(graph)
        assert find_interval_ordering(CLAW) is not None
        assert find_unit_interval_ordering(CLAW) is None
        assert not _oracles.has_ordering(CLAW, "unit")


def _eulerian_by_recurrence(n):
    # A(n, k) = k A(n-1, k) + (n - k + 1) A(n-1, k-1), indexed so coefficient of t^k counts n-k descents
    rows = {1: [0, 1]}
    for m in range(2, n + 1):
        prev = rows[m - 1] + [0]
        rows[m] = [0] + [k * prev[k] + (m - k + 1) * prev[k - 1] for k in range(1, m + 1)]
    return IntPoly(tuple(rows[n]))


@pytest.mark.acceptance(10, "closed forms for K_n and the empty graph, n<=7")
def test_10_closed_forms():
    with time_limit(30):
        for n in range(1, 8):
            K, E = complete_graph(n), empty_graph(n)
            assert a_eulerian(K) == IntPoly.monomial(n, factorial(n - 1))
            assert graphic_eulerian(K) == IntPoly.monomial(n, factorial(n))
            assert chromatic(K) == falling_factorial(n)
            assert graphic_eulerian(E) == _eulerian_by_recurrence(n) == eulerian_numbers(n)
            if n > 1:
                assert a_eulerian(E) == _eulerian_by_recurrence(n - 1)
