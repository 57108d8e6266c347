"""Graph reconstruction from the connectivity of k-vertex subsets."""

from ._krecon import (
    ContractError,
    Error,
    GadgetInstance,
    Graph,
    InvalidParameter,
    KSetInstance,
    NoConnectedCompletion,
    ParseError,
    UnsupportedInstance,
    analyze_pairs,
    bd_enumerate,
    brute_force_consistent,
    certify_unique,
    connected_ksets,
    is_consistent,
    parse_graph,
    parse_instance,
    random_triangle_free_connected,
    reduce_3sat,
    serialize_graph,
    serialize_instance,
    solve_partial,
    tf_enumerate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
