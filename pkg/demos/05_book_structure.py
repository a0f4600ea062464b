"""
Books inside the split host
===========================

Around an edge of the clique part there is a book: a K_{ell-1} whose
vertices other than z all see a large common set B.  Each small subset of B
then carries its own subdivided K_ell^-.
"""
import math

from subdense.bounds import book_family_lower
from subdense.constructions import book_claim_report, find_book_structure, split_construction, theorem_iii_family

for t in (3, 5, 8):
    sc = split_construction(4, t)
    book = find_book_structure(sc.graph, (0, 1), 4)
    claim = book_claim_report(sc.graph, (0, 1), 4, t, 0.5)
    fam = theorem_iii_family(book, 4)
    print(f"t={t}: A={book.A} z={book.z} |B|={len(book.B)} (need >= {claim['bound']:.2f})")
    print(f"      {len({w.vertex_set() for w in fam})} vertex sets, C(|B|,2) = {math.comb(len(book.B), 2)}")

sc = split_construction(5, 6)
book = find_book_structure(sc.graph, (0, 1), 5)
print("ell=5:", len(theorem_iii_family(book, 5)), "sets, lower count", book_family_lower(len(book.B), 5))
