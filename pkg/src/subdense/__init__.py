"""Exact tools for local density and distinguishable subdivisions of small graphs."""
from .bounds import BoundReport, bound_report, complete_count, komlos_cycle_count, theorem_i_count_lower
from .constructions import (
    BookStructure,
    ConstructionSpec,
    complete_bipartite,
    complete_graph,
    find_book_structure,
    named_graph,
    named_pattern,
    random_graph,
    split_construction,
    theorem_iii_family,
    tuza_r_for,
)
from .density import DensityReport, count_copies_anchored, is_locally_dense, k_local_density, local_density
from .graph import CapExceeded, Graph, Pattern, complete, complete_minus, cycle, induced_subgraph, path, star
from .io import parse_graph, serialize_graph
from .iso import automorphism_count, is_isomorphic, subgraph_classes
from .subdivision import (
    EnumerationResult,
    SubdivisionWitness,
    count_distinguishable,
    enumerate_distinguishable_embed,
    enumerate_distinguishable_subset,
    extract_subclique_subdivision,
    max_topological_clique,
    spans_subdivision,
    theorem_i_family,
    validate_witness,
)

__version__ = "0.1.0"
