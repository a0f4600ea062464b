import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_subdivision_sets
from subdense.constructions import (
    complete_bipartite,
    random_clique_subdivision,
    random_graph,
    split_construction,
)
from subdense.graph import CapExceeded, Graph, complete, complete_minus, cycle, path, star
from subdense.subdivision import (
    SubdivisionWitness,
    WitnessError,
    count_distinguishable,
    enumerate_distinguishable_embed,
    enumerate_distinguishable_subset,
    extract_subclique_subdivision,
    iter_witnesses,
    lemma5_violations,
    max_topological_clique,
    spans_subdivision,
    theorem_i_family,
    trivial_witness,
    validate_witness,
)

K3 = complete(3)


def k4_trivial():
    return trivial_witness(complete(4), complete(4), range(4))


def test_trivial_k4_witness_is_valid():
    assert validate_witness(complete(4), k4_trivial()) == []


def test_cycle_is_a_subdivided_triangle():
    w = SubdivisionWitness(K3, (0, 1, 2), {(0, 1): (0, 1), (1, 2): (1, 2), (0, 2): (2, 3, 4, 0)[::-1]})
    assert validate_witness(cycle(5), w) == []


def test_shared_internal_vertex_is_reported():
    g = complete(6)
    w = SubdivisionWitness(K3, (0, 1, 2), {(0, 1): (0, 3, 1), (1, 2): (1, 3, 2), (0, 2): (0, 2)})
    bad = validate_witness(g, w)
    assert any("internal vertex reused" in msg for msg in bad)


def test_other_violations_are_listed():
    g = cycle(5)
    w = SubdivisionWitness(K3, (0, 1, 1), {(0, 1): (0, 1), (1, 2): (1, 3), (0, 2): (0, 2)})
    bad = validate_witness(g, w)
    assert "branch map not injective" in bad
    assert any("non-edge" in msg for msg in bad)
    with pytest.raises(WitnessError):
        extract_subclique_subdivision(k4_trivial(), 3, host=cycle(4))


def test_spans_examples():
    w = spans_subdivision(complete(4), K3, {0, 1, 2, 3})
    assert w is not None and w.vertex_set() == (0, 1, 2, 3)
    assert validate_witness(complete(4), w) == []
    assert spans_subdivision(star(4), K3, {0, 1, 2}) is None
    assert spans_subdivision(star(4), K3, {1, 2, 3}) is None
    c = spans_subdivision(cycle(5), K3, range(5))
    assert c is not None and c.vertex_set() == (0, 1, 2, 3, 4)


@pytest.mark.parametrize(
    "g, f, expected",
    [(complete(4), K3, 5), (complete(5), K3, 16), (star(4), K3, 0), (cycle(5), K3, 1), (complete(5), complete(4), 6)],
)
def test_engine_examples(g, f, expected):
    assert count_distinguishable(g, f, "subset") == expected
    assert count_distinguishable(g, f, "embed") == expected
    assert enumerate_distinguishable_subset(g, f).vertex_sets == enumerate_distinguishable_embed(g, f).vertex_sets


def test_max_set_size_restricts_both_engines():
    a = enumerate_distinguishable_subset(complete(5), K3, 4)
    b = enumerate_distinguishable_embed(complete(5), K3, 4)
    assert a.count == b.count == math.comb(5, 3) + math.comb(5, 4)
    assert a.vertex_sets == b.vertex_sets


def test_caps_raise():
    with pytest.raises(CapExceeded):
        enumerate_distinguishable_subset(Graph(17), K3)
    with pytest.raises(CapExceeded):
        enumerate_distinguishable_embed(Graph(13), K3)
    res = enumerate_distinguishable_subset(complete(5), K3, set_cap=3)
    assert res.truncated and res.count == 3
    with pytest.raises(CapExceeded):
        count_distinguishable(complete(5), K3, set_cap=3)


def test_engines_agree_with_workers(monkeypatch):
    g = random_graph(8, 0.6, 3)
    serial = enumerate_distinguishable_subset(g, complete_minus(4))
    monkeypatch.setenv("SUBDIV_THREADS", "2")
    assert enumerate_distinguishable_subset(g, complete_minus(4)).vertex_sets == serial.vertex_sets
    assert enumerate_distinguishable_embed(g, complete_minus(4)).vertex_sets == serial.vertex_sets


@settings(max_examples=25, deadline=None)
@given(
    st.integers(4, 7),
    st.sampled_from([0.3, 0.5, 0.7]),
    st.integers(0, 10**6),
    st.sampled_from([K3, complete_minus(4), cycle(4), path(4), star(4)]),
)
def test_engines_match_brute_force(n, p, seed, f):
    g = random_graph(n, p, seed)
    if n > 6 and f.edge_count >= 4 and p > 0.5:
        n, g = 6, random_graph(6, p, seed)
    ref = sorted(brute_subdivision_sets(g, f), key=lambda s: (len(s), s))
    assert enumerate_distinguishable_subset(g, f).vertex_sets == ref
    assert enumerate_distinguishable_embed(g, f).vertex_sets == ref


@pytest.mark.parametrize("r", [3, 4, 5, 6])
def test_complete_host_identity(r):
    for ell in range(3, r + 1):
        assert count_distinguishable(complete(r), complete(ell)) == sum(math.comb(r, i) for i in range(ell, r + 1))


@settings(max_examples=20, deadline=None)
@given(st.integers(5, 8), st.integers(0, 10**6))
def test_adding_edges_never_lowers_count(n, seed):
    g = random_graph(n, 0.4, seed)
    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
    if not missing:
        return
    h = g.with_edge(*missing[seed % len(missing)])
    before = set(enumerate_distinguishable_embed(g, K3).vertex_sets)
    after = set(enumerate_distinguishable_embed(h, K3).vertex_sets)
    assert before <= after


def test_extraction_from_trivial_k4():
    out = extract_subclique_subdivision(k4_trivial(), 3)
    assert out.branch == (0, 1, 2)
    assert out.paths[(0, 2)] == (0, 3, 2)  # x_1 .. x_4, x_3 read from x_1's end
    assert validate_witness(complete(4), out) == []
    assert out.vertex_set() == (0, 1, 2, 3)
    edges = {tuple(sorted(p)) for r in out.paths.values() for p in zip(r, r[1:])}
    assert edges == {(0, 1), (1, 2), (2, 3), (0, 3)}


def test_extraction_identity_and_errors():
    w = k4_trivial()
    assert extract_subclique_subdivision(w, 4) == w
    with pytest.raises(ValueError):
        extract_subclique_subdivision(w, 5)
    with pytest.raises(ValueError):
        extract_subclique_subdivision(w, 1)


@pytest.mark.parametrize("seed", range(15))
def test_extraction_keeps_every_branch_vertex(seed):
    k = 3 + seed % 4
    host, w = random_clique_subdivision(k, 8 + seed % 6, seed)
    for ell in range(2, k + 1):
        out = extract_subclique_subdivision(w, ell, host)
        assert validate_witness(host, out) == []
        assert set(w.branch) <= set(out.vertex_set())
        assert set(out.vertex_set()) <= set(w.vertex_set())


@pytest.mark.parametrize("d, ell, expected", [(4, 3, 5), (5, 4, 6), (5, 3, 16), (6, 4, 22)])
def test_index_set_family_sizes(d, ell, expected):
    g = complete(d)
    fam = theorem_i_family(g, trivial_witness(g, g, range(d)), ell)
    assert len(fam) == expected
    assert len({s.vertex_set() for s in fam}) == expected
    assert all(validate_witness(g, s) == [] for s in fam)


def test_index_set_family_edge_cases():
    g = complete(4)
    w = trivial_witness(g, g, range(4))
    assert theorem_i_family(g, w, 4) == [w]
    assert len(theorem_i_family(g, w, 3, cap=2)) == 2


@pytest.mark.parametrize("g, cap, expected", [(complete(5), 6, 5), (complete_bipartite(3, 3), 6, 4), (cycle(6), 6, 3)])
def test_max_topological_clique(g, cap, expected):
    d, w = max_topological_clique(g, cap)
    assert d == expected
    assert validate_witness(g, w) == []


@pytest.mark.parametrize("ell, t", [(4, 2), (4, 3), (5, 2)])
def test_path_balance_on_every_split_witness(ell, t):
    sc = split_construction(ell, t)
    f = complete_minus(ell)
    seen = 0
    for w in iter_witnesses(sc.graph, f, symmetry=True):
        assert lemma5_violations(w, sc.A, sc.B) == []
        seen += 1
    assert seen > 0


def test_path_balance_flags_a_bad_path():
    g = complete(5)
    w = SubdivisionWitness(K3, (0, 1, 2), {(0, 1): (0, 3, 4, 1), (1, 2): (1, 2), (0, 2): (0, 2)})
    assert lemma5_violations(w, {0, 1, 2}, {3, 4})


def test_witness_json_roundtrip():
    host, w = random_clique_subdivision(5, 12, 7)
    back = SubdivisionWitness.from_json(json.loads(json.dumps(w.to_json())))
    assert back == w
    assert validate_witness(host, back) == []
