"""
Counting distinguishable subdivisions
=====================================

Two subdivisions are told apart only by their vertex sets.  The package has
two engines that count them from opposite ends; here both run on the same
hosts and are compared with the closed forms for complete hosts.
"""
from subdense import complete, cycle, star
from subdense.bounds import complete_count, komlos_cycle_count
from subdense.subdivision import enumerate_distinguishable_embed, enumerate_distinguishable_subset

for r in range(3, 7):
    for ell in range(3, r + 1):
        a = enumerate_distinguishable_subset(complete(r), complete(ell))
        b = enumerate_distinguishable_embed(complete(r), complete(ell))
        assert a.vertex_sets == b.vertex_sets
        print(f"K{r} hosting subdivided K{ell}: {a.count:3d}   formula {complete_count(ell, r)}")

# triangles subdivided are just cycles
for d in range(2, 6):
    print(f"cycles in K{d + 1}:", komlos_cycle_count(d), "(", 2 ** (d + 1), "subsets in total )")

# hosts with nothing to find
print("star / K3:", enumerate_distinguishable_subset(star(4), complete(3)).count)
print("C5 / K3 sets:", enumerate_distinguishable_embed(cycle(5), complete(3)).vertex_sets)
