"""Immutable host graphs and small patterns with bitmask adjacency.

Vertices are dense integers ``0..n-1``.  Row ``adj[v]`` is an ``int`` whose
bit ``u`` is set iff ``uv`` is an edge, so edge tests are a shift and mask and
common neighbourhoods are a single ``&``.
"""
from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable, Iterator, Sequence

Edge = tuple[int, int]
VertexSet = tuple[int, ...]

#: Largest pattern accepted anywhere (isomorphism/automorphism work is exponential).
PATTERN_MAX = 12


class CapExceeded(ValueError):
    """An input exceeds a configured enumeration or size cap."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertex_set(vertices: Iterable[int], n: int | None = None) -> VertexSet:
    """Canonical (sorted, duplicate-free) vertex set, range-checked against ``n``."""
    vs = tuple(sorted(set(vertices)))
    if n is not None and vs and (vs[0] < 0 or vs[-1] >= n):
        raise ValueError(f"vertex out of range for graph on {n} vertices: {vs}")
    return vs


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on ``0..n-1``; never mutated after construction."""

    __slots__ = ("n", "adj", "edge_count", "labels", "_edges")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), labels: Sequence[Hashable] | None = None):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        rows = [0] * n
        count = 0
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if rows[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            count += 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(rows))
        object.__setattr__(self, "edge_count", count)
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)
        object.__setattr__(self, "_edges", None)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        n = len(adj)
        return cls(n, [(u, v) for u in range(n) for v in iter_bits(adj[u] >> (u + 1) << (u + 1))])

    @classmethod
    def from_labeled_edges(cls, edges: Iterable[tuple[Hashable, Hashable]]) -> "Graph":
        """Build from arbitrary hashable labels; ``labels[i]`` records the original name of vertex ``i``."""
        index: dict[Hashable, int] = {}
        pairs = []
        for a, b in edges:
            for x in (a, b):
                if x not in index:
                    index[x] = len(index)
            pairs.append((index[a], index[b]))
        labels = [None] * len(index)
        for name, i in index.items():
            labels[i] = name
        return cls(len(index), pairs, labels=labels)

    # -- queries ---------------------------------------------------------
    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> tuple[Edge, ...]:
        if self._edges is None:
            es = tuple((u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)))
            object.__setattr__(self, "_edges", es)
        return self._edges

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    def non_isolated(self) -> list[int]:
        return [v for v in range(self.n) if self.adj[v]]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def with_edge(self, u: int, v: int) -> "Graph":
        return type(self)(self.n, self.edges() + (norm_edge(u, v),))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = frontier = 1
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self.full_mask

    def __reduce__(self):
        return (Graph, (self.n, self.edges(), self.labels))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, m={self.edge_count})"


class Pattern(Graph):
    """A small graph ``F`` (at most :data:`PATTERN_MAX` vertices) with an optional name."""

    __slots__ = ("label", "_aut")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), label: str | None = None):
        if n < 1:
            raise ValueError("pattern needs at least one vertex")
        if n > PATTERN_MAX:
            raise CapExceeded(f"pattern has {n} vertices; cap is {PATTERN_MAX}")
        super().__init__(n, edges)
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "_aut", None)

    def __reduce__(self):
        return (Pattern, (self.n, self.edges(), self.label))

    @classmethod
    def from_graph(cls, g: Graph, label: str | None = None) -> "Pattern":
        return cls(g.n, g.edges(), label=label)

    @property
    def automorphisms(self) -> int:
        if self._aut is None:
            from .iso import automorphism_count

            object.__setattr__(self, "_aut", automorphism_count(self))
        return self._aut

    @property
    def name(self) -> str:
        if self.label:
            return self.label
        from .iso import canonical_graph6

        return canonical_graph6(self)

    def __repr__(self):
        return f"Pattern({self.name!r}, n={self.n}, m={self.edge_count})"


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """``G[S]`` relabelled ``0..|S|-1`` in the sorted order of ``S``."""
    vs = vertex_set(s, g.n)
    pos = {v: i for i, v in enumerate(vs)}
    edges = [(pos[u], pos[v]) for u, v in combinations(vs, 2) if g.adj[u] >> v & 1]
    return Graph(len(vs), edges)


# -- built-in families -------------------------------------------------------
def complete(n: int) -> Pattern | Graph:
    edges = list(combinations(range(n), 2))
    return Pattern(n, edges, label=f"K{n}") if 1 <= n <= PATTERN_MAX else Graph(n, edges)


def complete_minus(n: int) -> Pattern:
    """``K_n`` minus the edge between its last two vertices."""
    if n < 2:
        raise ValueError("K_n^- needs n >= 2")
    edges = [e for e in combinations(range(n), 2) if e != (n - 2, n - 1)]
    return Pattern(n, edges, label=f"K{n}-")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    edges = [norm_edge(i, (i + 1) % n) for i in range(n)]
    return Pattern(n, edges, label=f"C{n}") if n <= PATTERN_MAX else Graph(n, edges)


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    edges = [(i, i + 1) for i in range(n - 1)]
    return Pattern(n, edges, label=f"P{n}") if 1 <= n <= PATTERN_MAX else Graph(n, edges)


def star(n: int) -> Graph:
    """Star on ``n`` vertices (centre 0), i.e. ``K_{1,n-1}``."""
    edges = [(0, i) for i in range(1, n)]
    return Pattern(n, edges, label=f"S{n}") if 1 <= n <= PATTERN_MAX else Graph(n, edges)


def empty(n: int) -> Graph:
    return Pattern(n, label=f"E{n}") if 1 <= n <= PATTERN_MAX else Graph(n)


def as_pattern(g: Graph, label: str | None = None) -> Pattern:
    if isinstance(g, Pattern):
        return g
    return Pattern.from_graph(g, label)
