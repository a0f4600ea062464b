"""
A dense host with few subdivisions
==================================

The split host is (K_ell^-, t)-locally dense, yet it carries only polynomially
many distinguishable subdivisions of K_ell^-.  The reason is visible path by
path: a route can only enter the independent side B after leaving A.
"""
from subdense import bounds, complete_minus, local_density
from subdense.constructions import split_construction
from subdense.subdivision import enumerate_distinguishable_subset, iter_witnesses, lemma5_violations

for ell, t in [(4, 2), (4, 3), (4, 5), (5, 2), (5, 3)]:
    sc = split_construction(ell, t)
    f = complete_minus(ell)
    dens = local_density(sc.graph, f).min_count
    s = enumerate_distinguishable_subset(sc.graph, f).count
    cap = bounds.bound_ii(ell, f.edge_count, t)
    print(f"ell={ell} t={t}: density {dens}, s = {s}, bound has {len(str(cap))} digits")

# Look at one witness closely.
sc = split_construction(4, 3)
w = next(iter_witnesses(sc.graph, complete_minus(4)))
print("A =", sc.A, "B =", sc.B)
print("branch", w.branch)
for e, route in sorted(w.paths.items()):
    print("  ", e, route)
print("violations:", lemma5_violations(w, sc.A, sc.B))

worst = max(sum(1 for x in v.vertex_set() if x in sc.B) for v in iter_witnesses(sc.graph, complete_minus(4)))
print("most B-vertices in one witness:", worst, "<=", 2 * 4 + 5)
