"""Subdivisions of a pattern in a host: witnesses, search and enumeration.

A witness records where each pattern vertex goes (its *branch* vertex) and,
for each pattern edge ``(i, j)`` with ``i < j``, a route from ``branch[i]`` to
``branch[j]``.  Two subdivisions are distinguishable when their vertex sets
differ, so enumeration works with vertex sets (stored as bitmasks).

Two independent engines count distinguishable subdivisions:

* ``subset``: for every vertex set ``S`` ask whether some subdivision spans
  exactly ``S`` (search inside ``G[S]``).
* ``embed``: grow all path systems from every branch assignment and collect
  the vertex sets of completed witnesses.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .graph import (
    CapExceeded,
    Graph,
    Pattern,
    VertexSet,
    as_pattern,
    complete,
    iter_bits,
    mask_of,
    vertex_set,
)

SUBSET_MAX_N = 16
EMBED_MAX_N = 24
EMBED_MAX_SET = 12
SET_CAP = 2**20


class WitnessError(ValueError):
    """A witness failed validation; ``violations`` lists every problem found."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


@dataclass(frozen=True)
class SubdivisionWitness:
    pattern: Pattern
    branch: tuple[int, ...]
    paths: Mapping[tuple[int, int], tuple[int, ...]]

    def vertex_set(self) -> VertexSet:
        vs = set(self.branch)
        for route in self.paths.values():
            vs.update(route)
        return vertex_set(vs)

    def internal(self, edge: tuple[int, int]) -> tuple[int, ...]:
        return tuple(self.paths[edge][1:-1])

    def to_json(self) -> dict:
        p = self.pattern
        return {
            "pattern": p.label if p.label else {"n": p.n, "edges": [list(e) for e in p.edges()]},
            "branch": [[i, x] for i, x in enumerate(self.branch)],
            "paths": [{"edge": list(e), "route": list(r)} for e, r in sorted(self.paths.items())],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SubdivisionWitness":
        spec = obj["pattern"]
        if isinstance(spec, str):
            from .constructions import named_pattern

            pattern = named_pattern(spec)
        else:
            pattern = Pattern(spec["n"], [tuple(e) for e in spec["edges"]])
        branch = [None] * pattern.n
        for i, x in obj["branch"]:
            branch[i] = x
        paths = {tuple(p["edge"]): tuple(p["route"]) for p in obj["paths"]}
        return cls(pattern, tuple(branch), paths)

    def __hash__(self):
        return hash((self.branch, tuple(sorted(self.paths.items()))))


def validate_witness(g: Graph, w: SubdivisionWitness) -> list[str]:
    """Every violated witness invariant, as messages; empty means valid."""
    bad: list[str] = []
    f = w.pattern
    if len(w.branch) != f.n:
        return [f"branch map has {len(w.branch)} entries, pattern has {f.n} vertices"]
    for i, x in enumerate(w.branch):
        if x is None or not 0 <= x < g.n:
            bad.append(f"branch vertex for pattern vertex {i} out of range: {x}")
    if bad:
        return bad
    if len(set(w.branch)) != f.n:
        bad.append("branch map not injective")
    want = set(f.edges())
    have = set(w.paths)
    for e in sorted(want - have):
        bad.append(f"missing path for pattern edge {e}")
    for e in sorted(have - want):
        bad.append(f"path for non-edge {e} of the pattern")
    branch_set = set(w.branch)
    owner: dict[int, tuple[int, int]] = {}
    for e in sorted(have & want):
        route = w.paths[e]
        i, j = e
        if len(route) < 2:
            bad.append(f"path {e} has no edges")
            continue
        if route[0] != w.branch[i] or route[-1] != w.branch[j]:
            bad.append(f"path {e} must run from {w.branch[i]} to {w.branch[j]}, runs {route[0]}..{route[-1]}")
        if len(set(route)) != len(route):
            bad.append(f"path {e} repeats a vertex")
        for a, b in zip(route, route[1:]):
            if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
                bad.append(f"path {e} uses non-edge ({a}, {b})")
        for x in route[1:-1]:
            if x in branch_set:
                bad.append(f"path {e} passes through branch vertex {x}")
            elif x in owner and owner[x] != e:
                bad.append(f"internal vertex reused: {x} lies on paths {owner[x]} and {e}")
            else:
                owner[x] = e
    return bad


def is_valid_witness(g: Graph, w: SubdivisionWitness) -> bool:
    return not validate_witness(g, w)


def check_witness(g: Graph, w: SubdivisionWitness) -> None:
    bad = validate_witness(g, w)
    if bad:
        raise WitnessError(bad)


def trivial_witness(g: Graph, f: Graph, branch: Iterable[int]) -> SubdivisionWitness:
    """Witness whose paths are single edges (``f`` embedded as a subgraph)."""
    f = as_pattern(f)
    b = tuple(branch)
    return SubdivisionWitness(f, b, {(i, j): (b[i], b[j]) for i, j in f.edges()})


# -- branch assignments ----------------------------------------------------------
def _twin_chains(f: Graph) -> list[int]:
    """``prev[v]``: an earlier twin of ``v`` whose image must be smaller, or -1.

    Swapping twins is an automorphism of ``f``, so forcing images to increase
    along each twin class keeps at least one map per vertex-set outcome.
    """
    prev = [-1] * f.n
    for v in range(f.n):
        for u in range(v - 1, -1, -1):
            if (f.adj[u] & ~(1 << v)) == (f.adj[v] & ~(1 << u)):
                prev[v] = u
                break
    return prev


def branch_maps(adj: tuple[int, ...], allowed: int, f: Graph, symmetry: bool = True) -> Iterator[tuple[int, ...]]:
    """Injective maps ``V(f) -> allowed`` with host degree (inside ``allowed``) at least the pattern degree."""
    need = [f.adj[v].bit_count() for v in range(f.n)]
    deg = {x: (adj[x] & allowed).bit_count() for x in iter_bits(allowed)}
    prev = _twin_chains(f) if symmetry else [-1] * f.n
    img = [0] * f.n

    def go(v: int, used: int):
        if v == f.n:
            yield tuple(img)
            return
        low = img[prev[v]] + 1 if prev[v] >= 0 else 0
        for x in iter_bits(allowed & ~used):
            if x < low or deg[x] < need[v]:
                continue
            img[v] = x
            yield from go(v + 1, used | 1 << x)

    yield from go(0, 0)


# -- exact-span search (subset engine) -------------------------------------------
def _span_routes(adj, allowed: int, ends: list[tuple[int, int]], used0: int) -> list[list[int]] | None:
    """Internally disjoint routes joining each ``ends`` pair that use exactly the vertices of ``allowed``."""
    if not ends:
        return [] if used0 == allowed else None
    failed: set[tuple[int, int, int]] = set()
    routes: list[list[int]] = []
    last = len(ends) - 1

    def go(idx: int, cur: int, used: int, route: list[int]) -> bool:
        key = (idx, cur, used)
        if key in failed:
            return False
        y = ends[idx][1]
        free = allowed & ~used
        if adj[cur] >> y & 1 and (idx < last or not free):
            routes.append(route + [y])
            if idx == last or go(idx + 1, ends[idx + 1][0], used, [ends[idx + 1][0]]):
                return True
            routes.pop()
        for w in iter_bits(adj[cur] & free):
            route.append(w)
            ok = go(idx, w, used | 1 << w, route)
            route.pop()
            if ok:
                return True
        failed.add(key)
        return False

    return routes if go(0, ends[0][0], used0, [ends[0][0]]) else None


def spans_subdivision(g: Graph, f: Graph, s: Iterable[int]) -> SubdivisionWitness | None:
    """A witness whose vertex set is exactly ``s``, or ``None``."""
    f = as_pattern(f)
    vs = vertex_set(s, g.n)
    if len(vs) < f.n:
        return None
    if len(vs) > SUBSET_MAX_N * 2:
        raise CapExceeded(f"subset of size {len(vs)} too large")
    allowed = mask_of(vs)
    if not _span_prefilter(g.adj, allowed, f):
        return None
    edges = list(f.edges())
    for phi in branch_maps(g.adj, allowed, f):
        ends = [(phi[i], phi[j]) for i, j in edges]
        routes = _span_routes(g.adj, allowed, ends, mask_of(phi))
        if routes is not None:
            return SubdivisionWitness(f, phi, {e: tuple(r) for e, r in zip(edges, routes)})
    return None


def _span_prefilter(adj, allowed: int, f: Graph) -> bool:
    size = allowed.bit_count()
    degs = sorted(((adj[x] & allowed).bit_count() for x in iter_bits(allowed)), reverse=True)
    need = sorted([f.adj[v].bit_count() for v in range(f.n)] + [2] * (size - f.n), reverse=True)
    if any(d < r for d, r in zip(degs, need)):
        return False
    if sum(degs) // 2 < f.edge_count + size - f.n:
        return False
    if f.is_connected() and f.n > 0:
        start = allowed & -allowed
        seen = frontier = start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & allowed & ~seen
            seen |= frontier
        if seen != allowed:
            return False
    return True


# -- enumeration -----------------------------------------------------------------
@dataclass
class EnumerationResult:
    engine: str
    vertex_sets: list[VertexSet]
    count: int
    truncated: bool = False

    def to_json(self, include_sets: bool = True) -> dict:
        out = {"engine": self.engine, "count": str(self.count), "truncated": self.truncated}
        if include_sets:
            out["vertex_sets"] = [list(s) for s in self.vertex_sets]
        return out


def _workers(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("SUBDIV_THREADS")
    if env:
        if not env.isdigit() or int(env) < 1:
            raise ValueError("SUBDIV_THREADS must be a positive integer")
        return int(env)
    return 1


def _run_chunks(fn, args: tuple, items: list, workers: int) -> list[int]:
    """Apply ``fn(*args, chunk)`` over chunks of ``items``; merged output is order independent."""
    if workers <= 1 or len(items) < 2:
        return fn(*args, items)
    chunks = [items[i::workers] for i in range(workers)]
    out: list[int] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(fn, *[[a] * len(chunks) for a in args], chunks):
            out.extend(part)
    return out


def _finish(engine: str, masks: Iterable[int], set_cap: int) -> EnumerationResult:
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), tuple(iter_bits(m))))
    truncated = len(uniq) > set_cap
    uniq = uniq[:set_cap]
    sets = [tuple(iter_bits(m)) for m in uniq]
    return EnumerationResult(engine, sets, len(sets), truncated)


def _subset_chunk(g: Graph, f: Pattern, masks: list[int]) -> list[int]:
    edges = list(f.edges())
    hits = []
    for allowed in masks:
        if not _span_prefilter(g.adj, allowed, f):
            continue
        for phi in branch_maps(g.adj, allowed, f):
            ends = [(phi[i], phi[j]) for i, j in edges]
            if _span_routes(g.adj, allowed, ends, mask_of(phi)) is not None:
                hits.append(allowed)
                break
    return hits


def enumerate_distinguishable_subset(
    g: Graph,
    f: Graph,
    max_set_size: int | None = None,
    *,
    max_n: int = SUBSET_MAX_N,
    set_cap: int = SET_CAP,
    workers: int | None = None,
) -> EnumerationResult:
    """Engine A: test every vertex subset of size ``|F|..max_set_size`` for a spanning subdivision."""
    f = as_pattern(f)
    if g.n > max_n:
        raise CapExceeded(f"subset engine limited to n <= {max_n}, got n = {g.n}")
    top = g.n if max_set_size is None else min(max_set_size, g.n)
    masks = [mask_of(s) for size in range(f.n, top + 1) for s in combinations(range(g.n), size)]
    hits = _run_chunks(_subset_chunk, (g, f), masks, _workers(workers))
    return _finish("subset", hits, set_cap)


def _final_masks(adj, allowed: int, ends: list[tuple[int, int]], used0: int, max_size: int, out: set) -> None:
    """Add to ``out`` the vertex mask of every completed path system; states are visited once."""
    if not ends:
        out.add(used0)
        return
    seen: set[tuple[int, int, int]] = set()
    last = len(ends) - 1
    stack = [(0, ends[0][0], used0)]
    while stack:
        state = stack.pop()
        if state in seen:
            continue
        seen.add(state)
        idx, cur, used = state
        if adj[cur] >> ends[idx][1] & 1:
            if idx == last:
                out.add(used)
            else:
                stack.append((idx + 1, ends[idx + 1][0], used))
        if used.bit_count() < max_size:
            for w in iter_bits(adj[cur] & allowed & ~used):
                stack.append((idx, w, used | 1 << w))


def _embed_chunk(g: Graph, f: Pattern, max_size: int, maps: list[tuple[int, ...]]) -> list[int]:
    edges = list(f.edges())
    found: set[int] = set()
    for phi in maps:
        ends = [(phi[i], phi[j]) for i, j in edges]
        _final_masks(g.adj, g.full_mask, ends, mask_of(phi), max_size, found)
    return list(found)


def enumerate_distinguishable_embed(
    g: Graph,
    f: Graph,
    max_set_size: int | None = None,
    *,
    max_n: int = EMBED_MAX_N,
    max_set: int = EMBED_MAX_SET,
    set_cap: int = SET_CAP,
    workers: int | None = None,
) -> EnumerationResult:
    """Engine B: grow path systems from every branch assignment and collect vertex sets."""
    f = as_pattern(f)
    if g.n > max_n:
        raise CapExceeded(f"embed engine limited to n <= {max_n}, got n = {g.n}")
    top = g.n if max_set_size is None else min(max_set_size, g.n)
    if top > max_set:
        raise CapExceeded(f"embed engine limited to sets of size <= {max_set}, asked for {top}")
    if top < f.n:
        return EnumerationResult("embed", [], 0)
    maps = list(branch_maps(g.adj, g.full_mask, f))
    masks = _run_chunks(_embed_chunk, (g, f, top), maps, _workers(workers))
    return _finish("embed", masks, set_cap)


def count_distinguishable(g: Graph, f: Graph, engine: str = "subset", max_set_size: int | None = None, **caps) -> int:
    """``s(F, G)`` restricted to subdivisions with at most ``max_set_size`` vertices."""
    if engine == "subset":
        res = enumerate_distinguishable_subset(g, f, max_set_size, **caps)
    elif engine == "embed":
        res = enumerate_distinguishable_embed(g, f, max_set_size, **caps)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    if res.truncated:
        raise CapExceeded(f"more than {res.count} vertex sets; raise set_cap")
    return res.count


def iter_witnesses(
    g: Graph, f: Graph, max_set_size: int | None = None, symmetry: bool = False
) -> Iterator[SubdivisionWitness]:
    """Every subdivision witness (all branch maps unless ``symmetry``); no state sharing, so exponential."""
    f = as_pattern(f)
    top = g.n if max_set_size is None else max_set_size
    edges = list(f.edges())
    for phi in branch_maps(g.adj, g.full_mask, f, symmetry=symmetry):
        ends = [(phi[i], phi[j]) for i, j in edges]
        routes: list[tuple[int, ...]] = []

        def go(idx: int, route: list[int], used: int):
            if idx == len(ends):
                yield SubdivisionWitness(f, phi, dict(zip(edges, routes)))
                return
            cur, y = route[-1], ends[idx][1]
            if g.adj[cur] >> y & 1:
                routes.append(tuple(route) + (y,))
                nxt = [ends[idx + 1][0]] if idx + 1 < len(ends) else []
                yield from go(idx + 1, nxt, used)
                routes.pop()
            if used.bit_count() < top:
                for w in iter_bits(g.adj[cur] & ~used):
                    route.append(w)
                    yield from go(idx, route, used | 1 << w)
                    route.pop()

        if not ends:
            if f.n <= top:
                yield SubdivisionWitness(f, phi, {})
            continue
        yield from go(0, [ends[0][0]], mask_of(phi))


# -- cliques and the sub-clique extraction ---------------------------------------
def extract_subclique_subdivision(w: SubdivisionWitness, ell: int, host: Graph | None = None) -> SubdivisionWitness:
    """From a subdivided ``K_k`` build a subdivided ``K_ell`` through all ``k`` branch vertices.

    Paths among the first ``ell`` branch vertices are kept, except that the
    path joining the first and the ``ell``-th is replaced by the walk
    ``x_ell -> x_{ell+1} -> ... -> x_k -> x_1`` along the old paths.
    """
    k = w.pattern.n
    if w.pattern.edge_count != k * (k - 1) // 2:
        raise WitnessError(["input witness is not a subdivision of a complete graph"])
    if host is not None:
        check_witness(host, w)
    if ell > k:
        raise ValueError(f"cannot extract K_{ell} from K_{k}")
    if ell == k:
        return w
    if ell < 2:
        raise ValueError("extraction needs ell >= 2 to keep every branch vertex")

    def oriented(i: int, j: int) -> tuple[int, ...]:
        return w.paths[(i, j)] if i < j else tuple(reversed(w.paths[(j, i)]))

    paths = {(i, j): w.paths[(i, j)] for i, j in combinations(range(ell), 2) if (i, j) != (0, ell - 1)}
    walk = [w.branch[ell - 1]]
    for i in range(ell - 1, k - 1):
        walk.extend(oriented(i, i + 1)[1:])
    walk.extend(oriented(k - 1, 0)[1:])
    paths[(0, ell - 1)] = tuple(reversed(walk))
    out = SubdivisionWitness(complete(ell), w.branch[:ell], paths)
    if host is not None:
        check_witness(host, out)
    return out


def restrict_clique_witness(w: SubdivisionWitness, index: Iterable[int]) -> SubdivisionWitness:
    """The subdivided ``K_|I|`` on branch vertices ``I`` using only paths among them."""
    idx = sorted(index)
    pos = {v: i for i, v in enumerate(idx)}
    paths = {(pos[a], pos[b]): w.paths[(a, b)] for a, b in combinations(idx, 2)}
    return SubdivisionWitness(complete(len(idx)), tuple(w.branch[i] for i in idx), paths)


def theorem_i_family(
    g: Graph, w: SubdivisionWitness, ell: int, cap: int | None = None
) -> list[SubdivisionWitness]:
    """One subdivided ``K_ell`` per index set ``I`` (``|I| >= ell``) of the branch vertices of ``w``.

    Each output meets the branch set of ``w`` exactly in the vertices indexed
    by ``I``, so the family is pairwise distinguishable.
    """
    check_witness(g, w)
    d = w.pattern.n
    if ell > d:
        raise ValueError(f"ell = {ell} exceeds d = {d}")
    family = []
    branch = set(w.branch)
    seen_traces = set()
    for size in range(ell, d + 1):
        for index in combinations(range(d), size):
            if cap is not None and len(family) >= cap:
                return family
            s = extract_subclique_subdivision(restrict_clique_witness(w, index), ell)
            check_witness(g, s)
            trace = frozenset(branch.intersection(s.vertex_set()))
            assert trace == {w.branch[i] for i in index}
            assert trace not in seen_traces
            seen_traces.add(trace)
            family.append(s)
    return family


def _clique_routes(adj, ends, used0) -> list[list[int]] | None:
    if not ends:
        return []
    failed: set[tuple[int, int, int]] = set()
    routes: list[list[int]] = []

    def go(idx: int, cur: int, used: int, route: list[int]) -> bool:
        key = (idx, cur, used)
        if key in failed:
            return False
        y = ends[idx][1]
        if adj[cur] >> y & 1:
            routes.append(route + [y])
            if idx == len(ends) - 1 or go(idx + 1, ends[idx + 1][0], used, [ends[idx + 1][0]]):
                return True
            routes.pop()
        for w in iter_bits(adj[cur] & ~used):
            route.append(w)
            ok = go(idx, w, used | 1 << w, route)
            route.pop()
            if ok:
                return True
        failed.add(key)
        return False

    return routes if go(0, ends[0][0], used0, [ends[0][0]]) else None


def find_topological_clique(g: Graph, d: int) -> SubdivisionWitness | None:
    """Some subdivided ``K_d`` in ``g``, or ``None``."""
    if d <= 0:
        return None
    f = complete(d)
    if sum(1 for x in range(g.n) if g.degree(x) >= d - 1) < d:
        return None
    edges = list(f.edges())
    for phi in branch_maps(g.adj, g.full_mask, f):
        ends = [(phi[i], phi[j]) for i, j in edges]
        routes = _clique_routes(g.adj, ends, mask_of(phi))
        if routes is not None:
            return SubdivisionWitness(f, phi, {e: tuple(r) for e, r in zip(edges, routes)})
    return None


def max_topological_clique(g: Graph, d_cap: int, max_n: int = EMBED_MAX_N) -> tuple[int, SubdivisionWitness | None]:
    """Largest ``d <= d_cap`` with a subdivided ``K_d`` in ``g``, searching downward from ``d_cap``."""
    if g.n > max_n:
        raise CapExceeded(f"topological clique search limited to n <= {max_n}")
    for d in range(min(d_cap, g.n), 0, -1):
        w = find_topological_clique(g, d)
        if w is not None:
            return d, w
    return 0, None


# -- invariants from the semi-bipartite counting argument ------------------------
def lemma5_violations(w: SubdivisionWitness, a_side: Iterable[int], b_side: Iterable[int]) -> list[str]:
    """Check the per-path internal-vertex balance and the bound on ``|V(T) & B|`` for ``B`` independent.

    With ``a_P`` / ``b_P`` the internal vertices of path ``P`` in ``A`` / ``B``:
    ``b_P <= a_P + 1`` (both ends in A), ``b_P <= a_P`` (split ends),
    ``b_P <= a_P - 1`` (both ends in B), and ``|V(T) & B| <= 2*ell + e(F)``.
    """
    a_set, b_set = set(a_side), set(b_side)
    bad = []
    for (i, j), route in sorted(w.paths.items()):
        inner = route[1:-1]
        a_p = sum(1 for x in inner if x in a_set)
        b_p = sum(1 for x in inner if x in b_set)
        ends_in_b = (route[0] in b_set) + (route[-1] in b_set)
        slack = 1 - ends_in_b
        if b_p > a_p + slack:
            bad.append(f"path {(i, j)}: b_P = {b_p} > a_P {slack:+d} = {a_p + slack}")
    f = w.pattern
    in_b = sum(1 for x in w.vertex_set() if x in b_set)
    if in_b > 2 * f.n + f.edge_count:
        bad.append(f"|V(T) & B| = {in_b} > 2*ell + e(F) = {2 * f.n + f.edge_count}")
    return bad
