"""Local density: how many copies of a pattern contain each edge (or vertex).

A *copy* of ``F`` is a (not necessarily induced) subgraph of ``G`` isomorphic
to ``F``.  Counts are obtained from embeddings: every copy through an edge
``e`` is the image of exactly ``|Aut(F)|`` embeddings, and each such embedding
sends exactly one oriented edge of ``F`` onto ``e``.  So

    copies(e) = sum over oriented F-edges (a, b) of ext(a->u, b->v) / |Aut(F)|

where ``ext`` counts extensions of the partial embedding.  The vertex variant
fixes one pattern vertex instead.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .graph import Graph, as_pattern, iter_bits, norm_edge
from .iso import subgraph_classes

Anchor = Union[int, tuple[int, int]]


class DensityError(ValueError):
    pass


def _extensions(g: Graph, f: Graph, fixed: dict[int, int], induced: bool) -> int:
    """Number of embeddings of ``f`` into ``g`` extending ``fixed`` (pattern -> host)."""
    for a, x in fixed.items():
        if g.adj[x].bit_count() < f.adj[a].bit_count():
            return 0
        for b, y in fixed.items():
            if a < b:
                fe, ge = f.adj[a] >> b & 1, g.adj[x] >> y & 1
                if (fe and not ge) or (induced and ge and not fe):
                    return 0
    rest = [v for v in range(f.n) if v not in fixed]
    order = []
    placed = sum(1 << a for a in fixed)
    while rest:
        rest.sort(key=lambda v: (-(f.adj[v] & placed).bit_count(), -f.adj[v].bit_count(), v))
        v = rest.pop(0)
        order.append(v)
        placed |= 1 << v
    if not order:
        return 1
    mapping = [-1] * f.n
    for a, x in fixed.items():
        mapping[a] = x
    deg_ok = [sum(1 << w for w in range(g.n) if g.adj[w].bit_count() >= f.adj[v].bit_count()) for v in range(f.n)]
    full = g.full_mask

    def go(i: int, used: int) -> int:
        v = order[i]
        cand = deg_ok[v] & ~used
        for u in range(f.n):
            w = mapping[u]
            if w < 0:
                continue
            if f.adj[v] >> u & 1:
                cand &= g.adj[w]
            elif induced:
                cand &= full ^ g.adj[w]
        if i == len(order) - 1:
            return cand.bit_count()
        total = 0
        for w in iter_bits(cand):
            mapping[v] = w
            total += go(i + 1, used | 1 << w)
        mapping[v] = -1
        return total

    return go(0, sum(1 << x for x in fixed.values()))


def count_copies_anchored(g: Graph, f: Graph, anchor: Anchor, induced: bool = False) -> int:
    """Copies of ``f`` in ``g`` whose edge set contains ``anchor`` (an edge) or whose vertex set contains it (a vertex)."""
    f = as_pattern(f)
    aut = f.automorphisms
    if isinstance(anchor, int):
        if not 0 <= anchor < g.n:
            raise DensityError(f"anchor vertex {anchor} not in graph")
        emb = sum(_extensions(g, f, {a: anchor}, induced) for a in range(f.n))
    else:
        u, v = anchor
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise DensityError(f"anchor {tuple(anchor)} is not an edge of the graph")
        if f.edge_count == 0:
            raise DensityError("pattern has no edges, so no copy can contain an edge")
        emb = 0
        for a, b in f.edges():
            emb += _extensions(g, f, {a: u, b: v}, induced)
            emb += _extensions(g, f, {a: v, b: u}, induced)
    q, r = divmod(emb, aut)
    assert r == 0, "embedding count not divisible by |Aut(F)|"
    return q


def count_copies(g: Graph, f: Graph, induced: bool = False) -> int:
    """Total number of copies of ``f`` in ``g``."""
    f = as_pattern(f)
    if f.n > g.n:
        return 0
    start = max(range(f.n), key=lambda v: (f.adj[v].bit_count(), -v))
    emb = sum(_extensions(g, f, {start: x}, induced) for x in range(g.n))
    return emb // f.automorphisms


def _anchors(g: Graph, anchor_kind: str) -> list:
    if anchor_kind == "edge":
        anchors = list(g.edges())
    elif anchor_kind == "vertex":
        anchors = g.non_isolated()
    else:
        raise ValueError(f"anchor_kind must be 'edge' or 'vertex', not {anchor_kind!r}")
    if not anchors:
        raise DensityError(f"graph has no {anchor_kind} anchors")
    return anchors


@dataclass
class DensityReport:
    anchor_kind: str
    pattern: str
    per_anchor: dict
    min_count: int
    argmin: Anchor
    k: int | None = None
    per_class: dict | None = None
    argmin_class: str | None = None
    induced: bool = False
    subgraphs: str | None = None

    def is_dense(self, t: int) -> bool:
        return self.min_count >= t

    def to_json(self) -> dict:
        def enc(a):
            return list(a) if isinstance(a, tuple) else a

        out = {
            "anchor_kind": self.anchor_kind,
            "pattern": self.pattern,
            "min_count": self.min_count,
            "argmin": enc(self.argmin),
            "per_anchor": [[enc(a), c] for a, c in self.per_anchor.items()],
        }
        if self.induced:
            out["induced"] = True
        if self.k is not None:
            out["k"] = self.k
            out["per_class"] = [[name, c] for name, c in self.per_class.items()]
            out["argmin_class"] = self.argmin_class
            out["subgraphs"] = self.subgraphs
        return out


def _argmin(counts: dict):
    best = min(counts.values())
    return best, next(a for a, c in counts.items() if c == best)


def local_density(g: Graph, f: Graph, anchor_kind: str = "edge", induced: bool = False) -> DensityReport:
    f = as_pattern(f)
    counts = {a: count_copies_anchored(g, f, a, induced) for a in _anchors(g, anchor_kind)}
    low, arg = _argmin(counts)
    return DensityReport(anchor_kind, f.name, counts, low, arg, induced=induced)


def k_local_density(
    g: Graph, f: Graph, k: int, anchor_kind: str = "edge", subgraphs: str = "induced"
) -> DensityReport:
    """Minimum, over anchors and over subgraph classes ``F' <= F`` with ``|F'| >= k``, of the anchored copy count.

    ``subgraphs="induced"`` lets ``F'`` range over induced subgraphs ``F[S]``
    (so ``k = |F|`` gives plain local density); ``"all"`` takes every
    subgraph class.  In edge mode only classes with at least one edge count.
    """
    f = as_pattern(f)
    if not 3 <= k <= f.n:
        raise DensityError(f"k must satisfy 3 <= k <= |F| = {f.n}")
    if subgraphs not in ("induced", "all"):
        raise ValueError("subgraphs must be 'induced' or 'all'")
    classes = subgraph_classes(f, k, require_edge=(anchor_kind == "edge"), induced=(subgraphs == "induced"))
    if not classes:
        raise DensityError(f"no subgraph of {f.name} with >= {k} vertices can contain an {anchor_kind}")
    anchors = _anchors(g, anchor_kind)
    table = {c.name: {a: count_copies_anchored(g, c, a) for a in anchors} for c in classes}
    per_class = {name: min(col.values()) for name, col in table.items()}
    per_anchor = {a: min(col[a] for col in table.values()) for a in anchors}
    low, arg = _argmin(per_anchor)
    cls = next(name for name, col in table.items() if col[arg] == low)
    return DensityReport(
        anchor_kind, f.name, per_anchor, low, arg, k=k, per_class=per_class, argmin_class=cls, subgraphs=subgraphs
    )


def is_locally_dense(
    g: Graph, f: Graph, t: int, k: int | None = None, anchor_kind: str = "edge", subgraphs: str = "induced"
) -> tuple[bool, DensityReport]:
    if t < 1:
        raise DensityError("t must be at least 1")
    rep = local_density(g, f, anchor_kind) if k is None else k_local_density(g, f, k, anchor_kind, subgraphs)
    return rep.min_count >= t, rep


def copies_containing_edge(g: Graph, e: tuple[int, int], size: int) -> list[tuple[int, ...]]:
    """Vertex sets of the ``K_size`` copies through edge ``e``, lexicographically sorted."""
    u, v = norm_edge(*e)
    if not g.has_edge(u, v):
        raise DensityError(f"{e} is not an edge")
    out: list[tuple[int, ...]] = []

    def grow(chosen: list[int], cand: int) -> None:
        if len(chosen) == size:
            out.append(tuple(sorted(chosen)))
            return
        for w in iter_bits(cand):
            grow(chosen + [w], cand & g.adj[w] & ~((2 << w) - 1))

    if size >= 2:
        grow([u, v], g.adj[u] & g.adj[v])
    return sorted(out)
