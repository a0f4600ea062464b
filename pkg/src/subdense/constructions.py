"""Generators for the extremal hosts and the structures found inside them."""
from __future__ import annotations

import json
import math
import random
import re
from dataclasses import dataclass, field
from itertools import combinations

from .density import copies_containing_edge
from .graph import (
    Graph,
    Pattern,
    VertexSet,
    complete,
    complete_minus,
    cycle,
    empty,
    norm_edge,
    path,
    star,
    vertex_set,
)
from .subdivision import SubdivisionWitness, check_witness

#: Identifies the generator behind :func:`random_graph`; bump if the draw order changes.
RANDOM_GRAPH_PRNG = "python-random-MT19937/v1"


@dataclass(frozen=True)
class SplitConstruction:
    """Clique ``A`` completely joined to an independent set ``B``."""

    graph: Graph
    A: VertexSet
    B: VertexSet
    ell: int
    t: int


def split_construction(ell: int, t: int) -> SplitConstruction:
    """``|A| = ell - 2``, ``|B| = t + 1``; every pair meeting ``A`` is an edge."""
    if ell < 4:
        raise ValueError("split construction needs ell >= 4")
    if t < 1:
        raise ValueError("t must be at least 1")
    a = tuple(range(ell - 2))
    n = ell - 2 + t + 1
    b = tuple(range(ell - 2, n))
    edges = [(u, v) for u, v in combinations(range(n), 2) if u in a or v in a]
    return SplitConstruction(Graph(n, edges), a, b, ell, t)


def complete_graph(r: int) -> Graph:
    if r < 1:
        raise ValueError("r must be at least 1")
    return complete(r)


def complete_bipartite(r: int, s: int) -> Graph:
    """Parts ``0..r-1`` and ``r..r+s-1``."""
    if r < 1 or s < 1:
        raise ValueError("part sizes must be at least 1")
    return Graph(r + s, [(u, r + v) for u in range(r) for v in range(s)])


def jung_r(d: int) -> int:
    """Part size of the balanced complete bipartite graph with no subdivided ``K_{d+1}``."""
    return d * d // 8


def tuza_r_for(ell: int, t: int) -> int:
    """Smallest ``r`` with ``C(r-2, ell-2) >= t``: each edge of ``K_r`` then lies in at least ``t`` copies of ``K_ell``."""
    if ell < 3 or t < 1:
        raise ValueError("need ell >= 3 and t >= 1")
    r = ell
    while math.comb(r - 2, ell - 2) < t:
        r += 1
    return r


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p): pairs ``(u, v)``, ``u < v``, in lexicographic order, each kept when a uniform draw is ``< p``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_clique_subdivision(k: int, n: int, seed: int, extra_p: float = 0.2, max_inner: int = 2):
    """A random host on ``n`` vertices containing a planted subdivided ``K_k``; returns ``(host, witness)``."""
    if k > n:
        raise ValueError("need k <= n")
    rng = random.Random(seed)
    verts = list(range(n))
    rng.shuffle(verts)
    branch = tuple(verts[:k])
    pool = verts[k:]
    paths = {}
    edges = set()
    for i, j in combinations(range(k), 2):
        inner = [pool.pop() for _ in range(min(rng.randint(0, max_inner), len(pool)))]
        route = (branch[i], *inner, branch[j])
        paths[(i, j)] = route
        edges.update(norm_edge(a, b) for a, b in zip(route, route[1:]))
    for e in combinations(range(n), 2):
        if e not in edges and rng.random() < extra_p:
            edges.add(e)
    host = Graph(n, sorted(edges))
    w = SubdivisionWitness(complete(k), branch, paths)
    check_witness(host, w)
    return host, w


# -- book structures -----------------------------------------------------------
@dataclass(frozen=True)
class BookStructure:
    """Clique ``A`` (``z = A[-1]``) with ``A - z`` completely joined to ``B``."""

    host: Graph
    A: tuple[int, ...]
    B: VertexSet

    @property
    def z(self) -> int:
        return self.A[-1]

    def violations(self) -> list[str]:
        h, bad = self.host, []
        if set(self.A) & set(self.B):
            bad.append("A and B intersect")
        for u, v in combinations(self.A, 2):
            if not h.has_edge(u, v):
                bad.append(f"A not complete: missing {norm_edge(u, v)}")
        for a in self.A[:-1]:
            for b in self.B:
                if not h.has_edge(a, b):
                    bad.append(f"A-z not complete to B: missing {norm_edge(a, b)}")
        return bad


def find_book_structure(g: Graph, e: tuple[int, int], ell: int) -> BookStructure:
    """Over copies ``J`` of ``K_{ell-1}`` through ``e`` and ``z`` in ``J``, maximise the common neighbourhood of ``J - z`` outside ``J``.

    Ties go to the lexicographically smallest ``J``, then the smallest ``z``.
    """
    copies = copies_containing_edge(g, e, ell - 1)
    if not copies:
        raise ValueError(f"no K_{ell - 1} contains edge {tuple(e)}")
    best = None
    for j in copies:
        jmask = sum(1 << v for v in j)
        for z in j:
            common = g.full_mask & ~jmask
            for v in j:
                if v != z:
                    common &= g.adj[v]
            size = common.bit_count()
            if best is None or size > best[0]:
                best = (size, j, z, common)
    _, j, z, common = best
    a = tuple(v for v in j if v != z) + (z,)
    return BookStructure(g, a, tuple(v for v in range(g.n) if common >> v & 1))


def book_claim_report(g: Graph, e: tuple[int, int], ell: int, t: int, eps: float) -> dict:
    """Both sides of ``|B| >= 2 t^(1-eps) / (ell-1)`` plus whether ``g(e) < t^eps`` held for this edge."""
    h = find_book_structure(g, e, ell)
    g_e = len(copies_containing_edge(g, e, ell - 1))
    bound = 2 * t ** (1 - eps) / (ell - 1)
    return {
        "edge": list(norm_edge(*e)),
        "A": list(h.A),
        "z": h.z,
        "B_size": len(h.B),
        "B": list(h.B),
        "bound": bound,
        "holds": len(h.B) >= bound,
        "g_e": g_e,
        "t_pow_eps": t**eps,
        "hypothesis_g_e_below_t_pow_eps": g_e < t**eps,
    }


def theorem_iii_family(h: BookStructure, ell: int, cap: int | None = None) -> list[SubdivisionWitness]:
    """Subdivided ``K_ell^-`` witnesses ``T(X)`` with vertex set ``A | X``, one per subset ``X`` of ``B``.

    ``|X| = C(ell-2, 2) + 1``: the first vertex of ``X`` is the last branch
    vertex, the rest subdivide the edges among the first ``ell - 2`` branch
    vertices, in lexicographic edge order.
    """
    if len(h.A) != ell - 1:
        raise ValueError(f"book needs |A| = ell - 1 = {ell - 1}")
    size = math.comb(ell - 2, 2) + 1
    if len(h.B) < size:
        raise ValueError(f"|B| = {len(h.B)} < C(ell-2, 2) + 1 = {size}")
    pattern = complete_minus(ell)
    inner_edges = list(combinations(range(ell - 2), 2))
    out = []
    for x in combinations(h.B, size):
        if cap is not None and len(out) >= cap:
            break
        branch = h.A + (x[0],)
        subdivided = dict(zip(inner_edges, x[1:]))
        paths = {}
        for i, j in pattern.edges():
            mid = subdivided.get((i, j))
            paths[(i, j)] = (branch[i], branch[j]) if mid is None else (branch[i], mid, branch[j])
        w = SubdivisionWitness(pattern, branch, paths)
        check_witness(h.host, w)
        out.append(w)
    return out


# -- named graphs and reproducible specs ----------------------------------------
_SIMPLE = {
    "k": complete,
    "c": cycle,
    "p": path,
    "path": path,
    "s": star,
    "star": star,
    "e": empty,
}


def named_graph(name: str) -> Graph:
    """Resolve ``k5``, ``k4-``, ``c6``, ``p4``/``path4``, ``s4``/``star4``, ``e3``, ``split(4,5)``, ``kb(3,3)``, ``random(9,0.5,42)``."""
    key = name.strip().lower().replace(" ", "")
    m = re.fullmatch(r"k(\d+)-", key)
    if m:
        return complete_minus(int(m.group(1)))
    m = re.fullmatch(r"(k|c|path|p|star|s|e)(\d+)", key)
    if m:
        return _SIMPLE[m.group(1)](int(m.group(2)))
    m = re.fullmatch(r"split\((\d+),(\d+)\)", key)
    if m:
        return split_construction(int(m.group(1)), int(m.group(2))).graph
    m = re.fullmatch(r"kb\((\d+),(\d+)\)", key)
    if m:
        return complete_bipartite(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"random\((\d+),([0-9.]+),(\d+)\)", key)
    if m:
        return random_graph(int(m.group(1)), float(m.group(2)), int(m.group(3)))
    raise KeyError(f"unknown graph name {name!r}")


def named_pattern(name: str) -> Pattern:
    g = named_graph(name)
    if isinstance(g, Pattern):
        return g
    return Pattern.from_graph(g, label=name)


_KINDS = {
    "split": ("ell", "t"),
    "complete": ("r",),
    "complete-bipartite": ("r", "s"),
    "random": ("n", "p", "seed"),
}


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown construction kind {self.kind!r}")
        missing = set(_KINDS[self.kind]) - set(self.params)
        extra = set(self.params) - set(_KINDS[self.kind])
        if missing or extra:
            raise ValueError(f"{self.kind} takes parameters {_KINDS[self.kind]}, got {sorted(self.params)}")

    def build(self) -> Graph:
        p = self.params
        if self.kind == "split":
            return split_construction(p["ell"], p["t"]).graph
        if self.kind == "complete":
            return complete_graph(p["r"])
        if self.kind == "complete-bipartite":
            return complete_bipartite(p["r"], p["s"])
        return random_graph(p["n"], p["p"], p["seed"])

    def to_json(self) -> dict:
        out = {"kind": self.kind, **{k: self.params[k] for k in _KINDS[self.kind]}}
        if self.kind == "random":
            out["prng"] = RANDOM_GRAPH_PRNG
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "ConstructionSpec":
        obj = dict(obj)
        kind = obj.pop("kind")
        obj.pop("prng", None)
        return cls(kind, obj)

    def header(self) -> str:
        return "construction " + json.dumps(self.to_json(), sort_keys=True)
