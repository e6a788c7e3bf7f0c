"""Rainbow connection of edge-colored graphs."""

from ._core import (
    BudgetExhausted,
    EdgeColoring,
    Graph,
    InputError,
    ReductionOutput,
    bfs_distances,
    bipartition,
    complete_bipartite_params,
    contract_path,
    decide_bipartite_rc2,
    decide_rc_le_k,
    diameter,
    enumerate_paths_up_to,
    exists_rainbow_path,
    expand_path,
    generate,
    is_complete,
    is_connected,
    is_rainbow_connected,
    is_strong_rainbow_connected,
    is_tree,
    kst_rc_formula,
    parse_coloring,
    parse_graph,
    rc_exact,
    serialize_coloring,
    serialize_graph,
    serialize_provenance,
    src_exact,
    subdivide_reduce,
    witness_2_coloring,
)

__all__ = [name for name in dir() if not name.startswith("_")]
