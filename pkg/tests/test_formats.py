import itertools
import random

import networkx as nx
import pytest

from threshgraph.enumeration import enumerate_threshold_graphs
from threshgraph.formats import (
    FormatError,
    from_edge_list,
    from_graph6,
    to_edge_list,
    to_graph6,
)
from threshgraph.graph import LabeledGraph


def nx_graph6(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((a - 1, b - 1) for a, b in g.edges)
    return nx.to_graph6_bytes(h, header=False).decode("ascii").strip()


def random_graph(n, rng, p=0.4):
    return LabeledGraph(n, frozenset(e for e in itertools.combinations(range(1, n + 1), 2)
                                     if rng.random() < p))


@pytest.mark.parametrize("n", [0, 1, 2, 3, 6, 7, 12, 62, 63, 100])
def test_graph6_bit_exact_against_networkx(n):
    rng = random.Random(n)
    for _ in range(5):
        g = random_graph(n, rng)
        s = to_graph6(g)
        assert s == nx_graph6(g)
        assert from_graph6(s) == g


def test_graph6_known_strings():
    assert to_graph6(LabeledGraph(0)) == "?"
    assert to_graph6(LabeledGraph.complete(2)) == "A_"
    assert to_graph6(LabeledGraph(5, frozenset({(2, 4)}))) == "DA?"
    assert from_graph6(">>graph6<<A_\n") == LabeledGraph.complete(2)


@pytest.mark.parametrize("n", range(2, 7))
def test_graph6_round_trip_on_enumeration(n):
    for g in enumerate_threshold_graphs(n):
        assert from_graph6(to_graph6(g)) == g


@pytest.mark.parametrize("bad", ["", "A", "A__", "B\x7f", "~?"])
def test_graph6_rejects(bad):
    with pytest.raises(FormatError):
        from_graph6(bad)


def test_edge_list_round_trip():
    g = LabeledGraph(5, frozenset({(2, 4), (1, 5)}))
    assert to_edge_list(g) == "5 2\n1 5\n2 4\n"
    assert to_edge_list(g, one_line=True) == "5 2 1 5 2 4"
    assert from_edge_list(to_edge_list(g)) == g
    assert from_edge_list(to_edge_list(g, one_line=True)) == g
    assert from_edge_list("3 0\n") == LabeledGraph(3)


@pytest.mark.parametrize("bad", ["", "3", "3 1\n1\n", "3 1\n2 1\n", "3 1\n1 4\n", "3 2\n1 2\n1 2\n",
                                 "a b", "3 -1"])
def test_edge_list_rejects(bad):
    with pytest.raises(FormatError):
        from_edge_list(bad)
