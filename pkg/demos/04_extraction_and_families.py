"""
From one subdivided clique to many
==================================

A subdivided K_k contains a subdivided K_ell through all k branch vertices.
Applied to every index set, this gives exponentially many distinguishable
subdivisions.
"""
from subdense import complete
from subdense.bounds import theorem_i_count_lower
from subdense.constructions import random_clique_subdivision
from subdense.subdivision import (
    extract_subclique_subdivision,
    max_topological_clique,
    theorem_i_family,
    trivial_witness,
    validate_witness,
)

# the smallest case: K_4 gives a 4-cycle through all four vertices
w = trivial_witness(complete(4), complete(4), range(4))
c = extract_subclique_subdivision(w, 3)
print("paths of the extracted K3:", dict(c.paths))

# a planted subdivided K_5 in a random host
host, w = random_clique_subdivision(5, 13, seed=11)
print("planted branch vertices:", w.branch)
for ell in range(2, 6):
    out = extract_subclique_subdivision(w, ell)
    print(f"ell={ell}: valid={not validate_witness(host, out)}, vertices={out.vertex_set()}")

print("largest subdivided clique in the host:", max_topological_clique(host, 7)[0])

for d, ell in [(4, 3), (5, 4), (6, 4)]:
    g = complete(d)
    fam = theorem_i_family(g, trivial_witness(g, g, range(d)), ell)
    print(f"d={d} ell={ell}: {len(fam)} witnesses, formula {theorem_i_count_lower(d, ell)}")
