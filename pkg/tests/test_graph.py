import networkx as nx
import pytest
from hypothesis import given

from worpitzky.graph import (
    GraphFormatError,
    LabeledGraph,
    RootSubset,
    complement,
    complete_graph,
    empty_graph,
    enumerate_labeled_graphs,
    parse_edge_list,
    parse_graph6,
    relabel,
    to_edge_list,
    to_graph6,
    to_root_subset,
)
from worpitzky.config import BoundExceeded
from worpitzky.polynomials import chromatic

from conftest import graphs, graphs_with_permutation


def networkx_graph6(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from((i - 1, j - 1) for i, j in G.edges)
    return nx.to_graph6_bytes(H, header=False).decode().strip()


def test_parse_edge_list_example(G_path):
    G = parse_edge_list("4\n1 2\n2 3")
    assert G == G_path
    assert G.n == 4 and G.edges == {(1, 2), (2, 3)}


def test_parse_edge_list_whitespace_and_comments():
    G = parse_edge_list("  4 \n\n 2   1  # reversed\n3\t2\n")
    assert G.edges == {(1, 2), (2, 3)}


def test_single_vertex():
    G = parse_edge_list("1")
    assert G.n == 1 and not G.edges


@pytest.mark.parametrize(
    "text, msg",
    [
        ("3\n1 1", "loop"),
        ("3\n1 4", "out of range"),
        ("3\n0 2", "out of range"),
        ("3\n1 2 3", "expected 'i j'"),
        ("3\n1 x", "non-integer"),
        ("x\n1 2", "vertex count"),
        ("", "empty"),
    ],
)
def test_parse_edge_list_errors(text, msg):
    with pytest.raises(GraphFormatError, match=msg):
        parse_edge_list(text)


def test_edge_list_round_trip(claw):
    assert parse_edge_list(to_edge_list(claw)) == claw


def test_graph6_example_matches_networkx(G_path):
    code = networkx_graph6(G_path)
    assert to_graph6(G_path) == code
    assert parse_graph6(code) == G_path


def test_graph6_single_vertex():
    G = parse_graph6("@")
    assert G.n == 1 and not G.edges
    assert to_graph6(G) == "@"


def test_graph6_header_is_accepted(G_path):
    assert parse_graph6(">>graph6<<" + to_graph6(G_path)) == G_path


@pytest.mark.parametrize("code", ["C", "Ew", "D?", " "])
def test_graph6_truncated_or_padded(code):
    with pytest.raises(GraphFormatError):
        parse_graph6(code)


def test_graph6_out_of_range_byte():
    with pytest.raises(GraphFormatError, match="range"):
        parse_graph6("C!")


def test_graph6_exhaustive_round_trip_and_reference():
    for n in range(1, 7):
        for G in enumerate_labeled_graphs(n):
            code = to_graph6(G)
            assert parse_graph6(code) == G
            if n <= 5:
                assert code == networkx_graph6(G)


def test_graph6_large_n_uses_long_size_field():
    G = LabeledGraph.from_edges(70, [(1, 70), (5, 6)])
    code = to_graph6(G)
    assert code.startswith("~")
    assert code == networkx_graph6(G)
    assert parse_graph6(code) == G


def test_complement_examples(G_path):
    assert complement(empty_graph(4)) == complete_graph(4)
    assert complement(G_path).edges == {(1, 3), (1, 4), (2, 4), (3, 4)}


@given(graphs())
def test_complement_involution_and_edge_count(G):
    H = complement(G)
    assert complement(H) == G
    assert len(G.edges) + len(H.edges) == G.n * (G.n - 1) // 2


def test_relabel_examples(G_path, G_prime):
    assert relabel(G_path, (1, 2, 3, 4)) == G_path
    assert relabel(G_path, (1, 4, 3, 2)) == G_prime


def test_relabel_rejects_non_permutation(G_path):
    with pytest.raises(ValueError):
        relabel(G_path, (1, 1, 2, 3))


@given(graphs_with_permutation(max_n=6))
def test_relabel_preserves_chromatic(case):
    G, sigma = case
    assert chromatic(relabel(G, sigma)) == chromatic(G)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 8), (4, 64), (5, 1024)])
def test_enumerate_counts(n, count):
    seen = list(enumerate_labeled_graphs(n))
    assert len(seen) == count
    assert len(set(seen)) == count


def test_enumerate_bound():
    with pytest.raises(BoundExceeded):
        next(enumerate_labeled_graphs(7))
    assert next(enumerate_labeled_graphs(7, max_n=7)) == empty_graph(7)


def test_to_root_subset_examples(G_path):
    assert to_root_subset(G_path).roots == {(1, 2), (2, 3)}
    assert not to_root_subset(empty_graph(4)).roots
    assert len(to_root_subset(complete_graph(4))) == 6


def test_root_subset_bijection():
    for n in range(1, 5):
        subsets = {to_root_subset(G).roots for G in enumerate_labeled_graphs(n)}
        assert len(subsets) == 2 ** (n * (n - 1) // 2)


def test_invalid_construction():
    with pytest.raises(ValueError):
        LabeledGraph(3, frozenset({(2, 1)}))
    with pytest.raises(ValueError):
        LabeledGraph(0, frozenset())
    with pytest.raises(ValueError):
        RootSubset(3, frozenset({(1, 4)}))
