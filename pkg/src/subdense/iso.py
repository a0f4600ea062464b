"""Isomorphism, automorphism counting and subgraph classes for small graphs.

Everything here is exact and exponential in the worst case; inputs are capped
at :data:`~subdense.graph.PATTERN_MAX` vertices.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .graph import PATTERN_MAX, CapExceeded, Graph, Pattern, induced_subgraph, iter_bits


def _check_cap(*graphs: Graph) -> None:
    for g in graphs:
        if g.n > PATTERN_MAX:
            raise CapExceeded(f"graph has {g.n} vertices; isomorphism cap is {PATTERN_MAX}")


def refine(adj: tuple[int, ...], colors: list[int]) -> list[int]:
    """Colour refinement to a stable partition.

    New colours are ranks of ``(old colour, sorted neighbour colours)``, so the
    result is isomorphism-invariant and can be compared across graphs that were
    refined together.
    """
    n = len(adj)
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in iter_bits(adj[v])))) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _union_colors(g1: Graph, g2: Graph, pairs) -> tuple[list[int], list[int]]:
    n1 = g1.n
    adj = g1.adj + tuple(r << n1 for r in g2.adj)
    init = [0] * (n1 + g2.n)
    for i, (a, b) in enumerate(pairs, start=1):
        init[a] = init[n1 + b] = i
    col = refine(adj, init)
    return col[:n1], col[n1:]


def _find_iso(g1: Graph, g2: Graph, pairs=()) -> dict[int, int] | None:
    """Some isomorphism ``g1 -> g2`` extending the partial map ``pairs``, or ``None``."""
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return None
    c1, c2 = _union_colors(g1, g2, pairs)
    if sorted(c1) != sorted(c2):
        return None
    n = g1.n
    fmap = dict(pairs)
    for a, b in pairs:
        if c1[a] != c2[b]:
            return None
    # map rare colours first, then vertices adjacent to already placed ones
    freq = {c: c1.count(c) for c in c1}
    order = []
    placed = 0
    for a in fmap:
        placed |= 1 << a
    rest = [v for v in range(n) if v not in fmap]
    while rest:
        rest.sort(key=lambda v: (-(g1.adj[v] & placed).bit_count(), freq[c1[v]], v))
        v = rest.pop(0)
        order.append(v)
        placed |= 1 << v
    used = set(fmap.values())

    def consistent(v: int, w: int) -> bool:
        for a, b in fmap.items():
            if (g1.adj[v] >> a & 1) != (g2.adj[w] >> b & 1):
                return False
        return True

    def go(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in range(n):
            if w in used or c2[w] != c1[v] or not consistent(v, w):
                continue
            fmap[v] = w
            used.add(w)
            if go(i + 1):
                return True
            del fmap[v]
            used.discard(w)
        return False

    for a, b in pairs:
        if not all((g1.adj[a] >> x & 1) == (g2.adj[b] >> y & 1) for x, y in pairs):
            return None
    return fmap if go(0) else None


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    _check_cap(g1, g2)
    return _find_iso(g1, g2) is not None


def automorphism_count(g: Graph) -> int:
    """``|Aut(g)|`` via a stabiliser chain: the product of successive orbit sizes."""
    _check_cap(g)
    total = 1
    fixed: list[tuple[int, int]] = []
    for v in range(g.n):
        orbit = sum(1 for w in range(g.n) if _find_iso(g, g, fixed + [(v, w)]) is not None)
        total *= orbit
        fixed.append((v, v))
    return total


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All automorphisms as image tuples; only sensible for small groups."""
    _check_cap(g)
    out = []
    n = g.n

    def go(prefix: list[int], used: int) -> None:
        v = len(prefix)
        if v == n:
            out.append(tuple(prefix))
            return
        for w in range(n):
            if used >> w & 1 or g.adj[w].bit_count() != g.adj[v].bit_count():
                continue
            if all((g.adj[v] >> a & 1) == (g.adj[w] >> prefix[a] & 1) for a in range(v)):
                prefix.append(w)
                go(prefix, used | 1 << w)
                prefix.pop()

    go([], 0)
    return out


def _leaf_code(adj: tuple[int, ...], colors: list[int]) -> tuple[int, ...]:
    n = len(adj)
    pos = colors  # all distinct 0..n-1 at a leaf
    inv = [0] * n
    for v in range(n):
        inv[pos[v]] = v
    return tuple(sum(1 << pos[u] for u in iter_bits(adj[inv[i]])) for i in range(n))


def _canonical_adj(adj: tuple[int, ...]) -> tuple[int, ...]:
    n = len(adj)
    best: list[tuple[int, ...] | None] = [None]

    def search(colors: list[int]) -> None:
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            code = _leaf_code(adj, colors)
            if best[0] is None or code > best[0]:
                best[0] = code
            return
        reps: list[int] = []
        for v in target:
            # swapping twins is an automorphism fixing the current partition
            if any((adj[v] & ~(1 << r)) == (adj[r] & ~(1 << v)) for r in reps):
                continue
            reps.append(v)
            nc = [2 * c for c in colors]
            nc[v] -= 1
            search(refine(adj, nc))

    search(refine(adj, [0] * n))
    return best[0] if best[0] is not None else ()


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """A complete invariant: equal iff the graphs are isomorphic."""
    _check_cap(g)
    return (g.n, _canonical_adj(g.adj))


def canonical_graph(g: Graph) -> Graph:
    return Graph.from_adjacency(_canonical_adj(g.adj))


def canonical_graph6(g: Graph) -> str:
    from .io import to_graph6

    return to_graph6(canonical_graph(g))


@lru_cache(maxsize=None)
def _named_forms(n: int) -> dict:
    from . import graph as gr

    builders = [gr.complete, gr.cycle, gr.path, gr.star, gr.empty, gr.complete_minus]
    names = {}
    for b in builders:
        try:
            p = b(n)
        except ValueError:
            continue
        names.setdefault(canonical_form(p), p.label)
    return names


def class_name(g: Graph) -> str:
    """Family name (``K4``, ``K4-``, ``C5``, ``P3``, ``S4``, ``E3``) or canonical graph6."""
    return _named_forms(g.n).get(canonical_form(g)) or canonical_graph6(g)


def subgraph_classes(f: Graph, min_vertices: int, require_edge: bool = False, induced: bool = False) -> list[Pattern]:
    """One representative per isomorphism class of subgraphs of ``f`` with at least ``min_vertices`` vertices.

    With ``induced`` only subgraphs ``f[S]`` take part.  Otherwise classes are
    reached by deleting edges from induced subgraphs.  Output is ordered by
    vertex count, edge count, then canonical code.
    """
    _check_cap(f)
    if min_vertices > f.n:
        raise ValueError("min_vertices exceeds the pattern order")
    seen: dict[tuple, Graph] = {}
    for size in range(max(min_vertices, 0), f.n + 1):
        for s in combinations(range(f.n), size):
            h = induced_subgraph(f, s)
            key = canonical_form(h)
            if key in seen:
                continue
            seen[key] = h
            stack = [] if induced else [h]
            while stack:
                cur = stack.pop()
                for e in cur.edges():
                    sub = Graph(cur.n, [x for x in cur.edges() if x != e])
                    k2 = canonical_form(sub)
                    if k2 not in seen:
                        seen[k2] = sub
                        stack.append(sub)
    out = []
    for key in sorted(seen, key=lambda k: (k[0], sum(r.bit_count() for r in k[1]) // 2, k[1])):
        adj = key[1]
        m = sum(r.bit_count() for r in adj) // 2
        if require_edge and m == 0:
            continue
        g = Graph.from_adjacency(adj)
        out.append(Pattern.from_graph(g, class_name(g)))
    return out
