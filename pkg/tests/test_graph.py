import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_automorphisms, brute_subgraph_classes, to_nx
from subdense.constructions import split_construction
from subdense.graph import (
    CapExceeded,
    Graph,
    Pattern,
    complete,
    complete_minus,
    cycle,
    empty,
    induced_subgraph,
    path,
    star,
)
from subdense.io import GraphFormatError, from_graph6, parse_graph, serialize_graph, to_graph6
from subdense.iso import automorphism_count, canonical_form, is_isomorphic, subgraph_classes


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


def test_parse_triangle():
    g = parse_graph(b"3 3\n0 1\n1 2\n0 2")
    assert (g.n, g.edge_count) == (3, 3)
    assert g == complete(3)


def test_graph6_k4_matches_networkx():
    theirs = nx.to_graph6_bytes(nx.complete_graph(4), header=False).strip()
    g = parse_graph(theirs, "graph6")
    assert (g.n, g.edge_count) == (4, 6)
    assert to_graph6(complete(4)).encode() == theirs


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("2 1\n0 0", "self-loop"),
        ("3 1\n0 3", "out of range"),
        ("3 2\n0 1\n1 0", "duplicate"),
        ("3 x\n", "line 1"),
        ("3 2\n0 1\n", "declares 2 edges"),
    ],
)
def test_edge_list_errors(text, fragment):
    with pytest.raises(GraphFormatError, match=fragment):
        parse_graph(text, "edge-list")


def test_graph6_errors_report_offset():
    with pytest.raises(GraphFormatError, match="offset"):
        from_graph6("C~~")
    with pytest.raises(GraphFormatError, match="offset 1"):
        from_graph6("C\x01")


def test_comments_are_skipped():
    g = parse_graph("# made by hand\n2 1\n# edge next\n0 1\n")
    assert g.edges() == ((0, 1),)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=12))
def test_roundtrip_both_formats(g):
    for fmt in ("edge-list", "graph6"):
        assert parse_graph(serialize_graph(g, fmt, comments=["x"]), fmt) == g


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=10))
def test_graph6_agrees_with_networkx(g):
    ours = to_graph6(g)
    back = nx.from_graph6_bytes(ours.encode())
    assert {tuple(sorted(e)) for e in back.edges()} == set(g.edges())


def test_graph6_large_n_header():
    g = Graph(70, [(0, 69), (5, 6)])
    s = to_graph6(g)
    assert s.startswith("~")
    assert from_graph6(s) == g
    assert nx.from_graph6_bytes(s.encode()).number_of_edges() == 2


def test_graph_invariants():
    g = Graph(5, [(0, 1), (3, 1), (4, 2)])
    assert g.edge_count == sum(g.degrees()) // 2
    assert all(g.has_edge(u, v) == g.has_edge(v, u) for u in range(5) for v in range(5))
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(AttributeError):
        g.n = 7


def test_labeled_edges_are_remapped():
    g = Graph.from_labeled_edges([("a", "b"), ("b", "c")])
    assert g.labels == ("a", "b", "c")
    assert g.edges() == ((0, 1), (1, 2))


def test_induced_subgraph_examples():
    assert induced_subgraph(complete(5), [0, 1, 2]) == complete(3)
    assert induced_subgraph(cycle(5), [0, 1, 3]).edges() == ((0, 1),)
    sc = split_construction(4, 3)
    assert induced_subgraph(sc.graph, sc.A) == complete(2)
    with pytest.raises(ValueError):
        induced_subgraph(complete(3), [0, 5])


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=8))
def test_induced_on_everything_is_isomorphic(g):
    assert is_isomorphic(induced_subgraph(g, range(g.n)), g)


def test_isomorphism_examples():
    assert is_isomorphic(complete(3), cycle(3))
    assert not is_isomorphic(path(4), star(4))
    c4_chord = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    assert is_isomorphic(complete_minus(4), c4_chord)
    with pytest.raises(CapExceeded):
        is_isomorphic(Graph(13), Graph(13))


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_isomorphism_under_relabelling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
    assert is_isomorphic(g, h)
    assert canonical_form(g) == canonical_form(h)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_isomorphism_matches_networkx(a, b):
    assert is_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))
    assert (canonical_form(a) == canonical_form(b)) == nx.is_isomorphic(to_nx(a), to_nx(b))


@pytest.mark.parametrize("f, expected", [(complete(4), 24), (path(3), 2)])
def test_automorphism_examples(f, expected):
    assert automorphism_count(f) == expected


def test_kminus_automorphisms_by_brute_force():
    assert brute_automorphisms(complete_minus(4)) == 4
    assert automorphism_count(complete_minus(4)) == 4


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_automorphisms_factorial(n):
    assert complete(n).automorphisms == math.factorial(n)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_automorphisms_match_brute_force(g):
    count = automorphism_count(g)
    assert count == brute_automorphisms(g)
    assert math.factorial(g.n) % count == 0


def test_large_symmetric_patterns_are_fast():
    assert complete(12).automorphisms == math.factorial(12)
    assert empty(12).automorphisms == math.factorial(12)
    with pytest.raises(CapExceeded):
        Pattern(13)


def test_subgraph_classes_triangle():
    names = [p.name for p in subgraph_classes(complete(3), 3, True)]
    assert sorted(names) == sorted(["K3", "P3", "BG"])  # BG: one edge plus an isolated vertex


def test_subgraph_classes_k4_has_ten():
    classes = subgraph_classes(complete(4), 4, True)
    assert len(classes) == len(brute_subgraph_classes(complete(4), 4)) == 10


def test_subgraph_classes_path_including_edgeless():
    classes = subgraph_classes(path(3), 3, False)
    assert [c.edge_count for c in classes] == [0, 1, 2]
    assert classes[0].name == "E3" and classes[2].name == "P3"


@pytest.mark.parametrize(
    "f, k, induced",
    [(complete_minus(4), 3, False), (complete_minus(5), 3, False), (cycle(5), 4, False), (complete_minus(5), 3, True)],
)
def test_subgraph_classes_match_brute_force(f, k, induced):
    ours = subgraph_classes(f, k, True, induced=induced)
    ref = brute_subgraph_classes(f, k, True, induced=induced)
    assert len(ours) == len(ref)
    for c in ours:
        assert sum(nx.is_isomorphic(to_nx(c), r) for r in ref) == 1


def test_subgraph_classes_pairwise_non_isomorphic_and_ordered():
    classes = subgraph_classes(complete(5), 3, True)
    for a, b in zip(classes, classes[1:]):
        assert (a.n, a.edge_count) <= (b.n, b.edge_count)
    for i, a in enumerate(classes):
        for b in classes[i + 1:]:
            assert not is_isomorphic(a, b)
