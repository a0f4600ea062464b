from itertools import combinations
from pathlib import Path

import pytest

from oracles import brute_anchored
from subdense.constructions import (
    ConstructionSpec,
    complete_bipartite,
    complete_graph,
    find_book_structure,
    jung_r,
    named_graph,
    random_clique_subdivision,
    random_graph,
    split_construction,
    theorem_iii_family,
    tuza_r_for,
    BookStructure,
)
from subdense.density import local_density
from subdense.graph import Graph, complete, complete_minus, cycle, path, star
from subdense.io import parse_graph, serialize_graph
from subdense.subdivision import validate_witness

GOLDEN = Path(__file__).parent / "data" / "random_9_0.5_42.edges"


@pytest.mark.parametrize("ell, t, n, m", [(4, 3, 6, 9), (5, 2, 6, 12), (4, 5, 8, 13), (6, 3, 8, 6 + 16)])
def test_split_sizes(ell, t, n, m):
    sc = split_construction(ell, t)
    assert (sc.graph.n, sc.graph.edge_count) == (n, m)
    assert len(sc.A) == ell - 2 and len(sc.B) == t + 1
    assert all(not sc.graph.has_edge(u, v) for u, v in combinations(sc.B, 2))


def test_split_rejects_small_ell():
    with pytest.raises(ValueError):
        split_construction(3, 4)


@pytest.mark.parametrize("ell, t", [(4, 1), (4, 2), (4, 3), (4, 5), (5, 2), (5, 3), (6, 2)])
def test_split_is_kminus_dense(ell, t):
    sc = split_construction(ell, t)
    assert local_density(sc.graph, complete_minus(ell)).min_count >= t


@pytest.mark.parametrize("ell, t", [(4, 2), (4, 3), (5, 2), (5, 3)])
@pytest.mark.parametrize("family", [path, star])
def test_split_is_dense_for_paths_and_stars(ell, t, family):
    sc = split_construction(ell, t)
    assert local_density(sc.graph, family(ell)).min_count >= t


def test_split_is_not_dense_for_c4_or_matching():
    # Edges inside A lie in no C4 or 2K2 when |A| = 2: every such copy would
    # need a second edge avoiding both A-vertices, and B is independent.
    sc = split_construction(4, 5)
    a_edge = (sc.A[0], sc.A[1])
    two_k2 = Graph(4, [(0, 1), (2, 3)])
    assert brute_anchored(sc.graph, cycle(4), a_edge) == 0
    assert brute_anchored(sc.graph, two_k2, a_edge) == 0
    assert local_density(sc.graph, cycle(4)).min_count == 0
    assert local_density(sc.graph, two_k2).min_count == 0


def test_simple_hosts():
    assert complete_graph(4).edge_count == 6
    kb = complete_bipartite(3, 3)
    assert kb.edge_count == 9 and max(kb.degrees()) == 3
    assert jung_r(5) == 3


@pytest.mark.parametrize("ell, t, r", [(4, 6, 6), (3, 5, 7), (4, 7, 7), (4, 1, 4)])
def test_tuza_r_for(ell, t, r):
    assert tuza_r_for(ell, t) == r
    assert local_density(complete(r), complete(ell)).min_count >= t


def test_random_graph_extremes_and_golden():
    assert random_graph(5, 0.0, 1).edge_count == 0
    assert random_graph(5, 1.0, 1) == complete(5)
    assert random_graph(9, 0.5, 42) == parse_graph(GOLDEN.read_bytes())
    assert random_graph(9, 0.5, 42) == random_graph(9, 0.5, 42)


def test_random_golden_text_is_byte_identical():
    spec = ConstructionSpec("random", {"n": 9, "p": 0.5, "seed": 42})
    assert serialize_graph(spec.build(), "edges", comments=[spec.header()]) == GOLDEN.read_text()


def test_spec_json_roundtrip():
    spec = ConstructionSpec("split", {"ell": 5, "t": 2})
    assert ConstructionSpec.from_json(spec.to_json()) == spec
    with pytest.raises(ValueError):
        ConstructionSpec("split", {"ell": 5})


def test_named_graphs():
    assert named_graph("k4-") == complete_minus(4)
    assert named_graph("star4") == star(4)
    assert named_graph("split(4,3)") == split_construction(4, 3).graph
    with pytest.raises(KeyError):
        named_graph("dodecahedron")


def brute_best_book(g, e, ell):
    best = -1
    for j in combinations(range(g.n), ell - 1):
        if not set(e) <= set(j) or any(not g.has_edge(u, v) for u, v in combinations(j, 2)):
            continue
        for z in j:
            rest = [v for v in j if v != z]
            common = [x for x in range(g.n) if x not in j and all(g.has_edge(x, v) for v in rest)]
            best = max(best, len(common))
    return best


def test_book_on_split_matches_brute_force():
    sc = split_construction(4, 5)
    book = find_book_structure(sc.graph, (0, 1), 4)
    assert len(book.B) == 5 == brute_best_book(sc.graph, (0, 1), 4)
    w = book.z
    assert w in sc.B and set(book.A) == {0, 1, w}
    assert set(book.B) == set(sc.B) - {w}
    assert book.violations() == []


def test_book_on_k5_and_c5():
    assert len(find_book_structure(complete(5), (1, 3), 4).B) == 2 == brute_best_book(complete(5), (1, 3), 4)
    with pytest.raises(ValueError):
        find_book_structure(cycle(5), (0, 1), 4)


@pytest.mark.parametrize("seed", range(6))
def test_book_size_matches_brute_force_on_random_hosts(seed):
    g = random_graph(8, 0.7, seed)
    for e in g.edges()[:6]:
        try:
            book = find_book_structure(g, e, 4)
        except ValueError:
            assert brute_best_book(g, e, 4) == -1
            continue
        assert len(book.B) == brute_best_book(g, e, 4)
        assert book.violations() == []


def test_book_family_sizes():
    sc = split_construction(4, 4)
    book = find_book_structure(sc.graph, (0, 1), 4)
    assert len(book.B) == 4
    fam = theorem_iii_family(book, 4)
    assert len({w.vertex_set() for w in fam}) == 6
    assert all(validate_witness(sc.graph, w) == [] for w in fam)
    small = BookStructure(sc.graph, book.A, book.B[:1])
    with pytest.raises(ValueError):
        theorem_iii_family(small, 4)


def test_book_family_for_five():
    sc = split_construction(5, 6)
    book = find_book_structure(sc.graph, (0, 1), 5)
    fam = theorem_iii_family(book, 5)
    assert len({w.vertex_set() for w in fam}) == len(fam) > 0
    assert all(validate_witness(sc.graph, w) == [] for w in fam)


def test_planted_subdivision_is_valid():
    host, w = random_clique_subdivision(6, 14, 3)
    assert host.n == 14 and validate_witness(host, w) == []
