"""Packing counts of list colorings of graphs.

Counts are Python ints of arbitrary size. Graphs are ``Graph(n, edges)`` or come
from the family constructors (``path``, ``cycle``, ...). List assignments are
lists of color lists, one per vertex.
"""

from ._listpack import (
    BoundReport,
    BudgetExceeded,
    Graph,
    InvariantFailure,
    __version__,
    alon_furedi_nonzero_bound,
    canonical_pattern,
    cartesian_with_complete,
    check_bound_against_count,
    chromatic_polynomial,
    classical_packing_count,
    complete,
    complete_bipartite,
    count_fpf_bijections,
    count_list_colorings,
    count_packings_direct,
    count_packings_via_product,
    cycle,
    derangements,
    dz_threshold,
    enumerate_patterns,
    equality_probe,
    girth,
    girth8_bound,
    latin_array_count,
    list_packing_function_exact,
    list_packing_function_sampled,
    list_packing_number,
    packing_lower_bound,
    parse_graph6,
    path,
    random_graph,
    random_tree,
    star,
    to_graph6,
    tree_packing_value,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
