import itertools
import random
from collections import defaultdict

import pytest
from hypothesis import given
from hypothesis import strategies as st

from threshgraph.bijection import (
    AscentSelection,
    canonical_pair,
    is_standard_form,
    phi,
    phi_inverse,
    run_partition,
    same_graph_pairs,
    selection_word,
    standardize,
)
from threshgraph.combinatorics import Permutation
from threshgraph.enumeration import random_pair, random_presentation
from threshgraph.graph import LabeledGraph, SignWord, ThresholdPair, construct

from oracles import naive_construct, threshold_edge_sets
from test_graph import pairs

FIGURE = LabeledGraph(5, frozenset({(2, 4)}))
P = ThresholdPair.parse


def all_pairs(n):
    return [ThresholdPair(Permutation(p), SignWord(w))
            for p in itertools.permutations(range(1, n + 1))
            for w in itertools.product((1, -1), repeat=n)]


@pytest.mark.parametrize("text, expected", [("24135;++---", True), ("42351;-+---", False),
                                            ("12;++", True), ("21;+-", False), ("21;--", False)])
def test_is_standard_form(text, expected):
    assert is_standard_form(P(text)) is expected


def test_size_one_rejected():
    with pytest.raises(ValueError):
        is_standard_form(P("1;+"))
    with pytest.raises(ValueError):
        standardize(P("1;+"))


@pytest.mark.parametrize("text, expected", [("42351;-+---", "24135;++---"), ("21;--", "12;--"),
                                            ("24135;++---", "24135;++---")])
def test_standardize_examples(text, expected):
    assert standardize(P(text)) == P(expected)


@given(pairs(min_n=2))
def test_standardize_properties(p):
    s = standardize(p)
    assert is_standard_form(s)
    assert construct(s) == construct(p)
    assert standardize(s) == s


def test_run_partition():
    rp = run_partition(SignWord.parse("++---"))
    assert rp.boundaries == (1, 3, 6)
    assert rp.segments == ((1, 2), (3, 4, 5))
    assert rp.labels(Permutation.parse("24135")) == ({2, 4}, {1, 3, 5})
    assert run_partition(SignWord.parse("++++")).segments == ((1, 2, 3, 4),)
    assert len(run_partition(SignWord.parse("+-+-")).segments) == 4
    with pytest.raises(ValueError):
        run_partition(SignWord(()))


def test_same_graph_pairs_examples():
    assert same_graph_pairs(P("24135;++---"), P("42351;-+---"))
    assert same_graph_pairs(P("42351;-+---"), P("42351;-+---"))
    assert not same_graph_pairs(P("12;++"), P("12;+-"))
    with pytest.raises(ValueError):
        same_graph_pairs(P("12;++"), P("123;+++"))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_same_graph_pairs_exhaustive(n):
    ps = all_pairs(n)
    gs = [naive_construct(p.perm.entries, p.word.letters) for p in ps]
    for p, g in zip(ps, gs):
        for q, h in zip(ps, gs):
            assert same_graph_pairs(p, q) == (g == h)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_same_graph_pairs_random(n):
    rng = random.Random(n)
    hits = 0
    for _ in range(3000):
        p = random_pair(n, rng)
        q = random_presentation(p, rng) if rng.random() < 0.5 else random_pair(n, rng)
        same = construct(p) == construct(q)
        hits += same
        assert same_graph_pairs(p, q) == same
        assert same_graph_pairs(q, p) == same
    assert hits > 1000


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_unique_standard_pair_per_graph(n):
    groups = defaultdict(list)
    for p in all_pairs(n):
        groups[construct(p)].append(p)
    assert len(groups) == len(threshold_edge_sets(n))
    for g, members in groups.items():
        standard = [p for p in members if is_standard_form(p)]
        assert len(standard) == 1
        assert all(standardize(p) == standard[0] for p in members)
        assert canonical_pair(g) == standard[0]


def test_selection_validation():
    with pytest.raises(ValueError):
        AscentSelection(Permutation.parse("21"), frozenset())
    with pytest.raises(ValueError):
        AscentSelection(Permutation.parse("1324"), frozenset({2}))
    with pytest.raises(ValueError):
        AscentSelection(Permutation.parse("1"), frozenset())
    assert str(AscentSelection(Permutation.parse("24135"), frozenset({1, 3, 4}))) == "24135;{1,3,4}"


def test_phi_examples():
    assert phi(FIGURE) == AscentSelection(Permutation.parse("24135"), frozenset({1, 3, 4}))
    assert phi(LabeledGraph.empty(2)) == AscentSelection(Permutation.parse("12"), frozenset())
    assert phi(LabeledGraph.complete(2)) == AscentSelection(Permutation.parse("12"), frozenset({1}))
    with pytest.raises(ValueError):
        phi(LabeledGraph(1))
    with pytest.raises(ValueError):
        phi(LabeledGraph(4, frozenset({(1, 2), (3, 4)})))


def test_phi_inverse_examples():
    sel = AscentSelection(Permutation.parse("24135"), frozenset({1, 3, 4}))
    assert selection_word(sel) == SignWord.parse("++---")
    assert phi_inverse(sel) == FIGURE
    assert phi_inverse(AscentSelection(Permutation.parse("12"), frozenset())) == LabeledGraph.empty(2)
    for n in range(2, 8):
        full = AscentSelection(Permutation.identity(n), frozenset(range(1, n)))
        assert phi_inverse(full) == LabeledGraph.complete(n)


@given(pairs(min_n=2))
def test_phi_round_trip_from_graphs(p):
    g = construct(p)
    sel = phi(g)
    assert phi_inverse(sel) == g
    assert is_standard_form(ThresholdPair(sel.perm, selection_word(sel)))


@st.composite
def selections(draw):
    n = draw(st.integers(2, 9))
    perm = draw(st.permutations(list(range(1, n + 1))).filter(lambda q: q[0] < q[1]))
    asc = [i for i in range(1, n) if perm[i - 1] < perm[i]]
    marks = draw(st.sets(st.sampled_from(asc)))
    return AscentSelection(Permutation(tuple(perm)), frozenset(marks))


@given(selections())
def test_phi_round_trip_from_selections(sel):
    assert phi(phi_inverse(sel)) == sel
