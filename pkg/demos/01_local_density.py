"""
Local density by hand
=====================

Count how many copies of a small pattern pass through each edge of a host,
and see where the minimum sits.
"""
from subdense import complete, complete_minus, cycle, local_density, k_local_density
from subdense.constructions import split_construction, tuza_r_for

# every edge of K_6 lies in C(4, 2) = 6 copies of K_4
rep = local_density(complete(6), complete(4))
print("K6 / K4: min copies per edge =", rep.min_count)

# pick r so that each edge of K_r sees at least t copies of K_ell
r = tuza_r_for(4, 7)
print("smallest r with C(r-2, 2) >= 7:", r, "->", local_density(complete(r), complete(4)).min_count)

# a triangle-free host is not (K_3, 1)-dense
print("C5 / K3:", local_density(cycle(5), complete(3)).min_count)

# The split host: a small clique A joined to an independent set B.
sc = split_construction(4, 5)
rep = local_density(sc.graph, complete_minus(4))
print("split(4,5) / K4-: min", rep.min_count, "at edge", rep.argmin)
for edge, count in list(rep.per_anchor.items())[:4]:
    print("   ", edge, count)

# The k-variant looks at smaller pieces of the pattern as well.
small = split_construction(4, 3).graph
for k in (3, 4):
    rep = k_local_density(small, complete_minus(4), k)
    print(f"k={k}: per class {rep.per_class}, overall {rep.min_count}")
