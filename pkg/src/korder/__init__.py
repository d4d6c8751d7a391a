"""korder: cycle-order checking, cubic graph census, and symmetry tools for
small graphs, with exhaustive-search witnesses and refutation certificates.
"""

from .graphs import (
    DisconnectedGraphError,
    Graph,
    GraphConstructionError,
    count_at_distance,
    degree_sequence,
    diameter,
    distance,
    girth,
    graph_from_edges,
    has_square,
    has_triangle,
    is_connected,
    is_regular,
    vertex_connectivity,
)
from .families import (
    build_family,
    complete,
    complete_bipartite,
    fano_incidence,
    generalized_petersen,
    heawood,
    petersen,
    star_graph,
    torus_graph,
)
from .graphio import Graph6Error, dot_export, graph6_decode, graph6_encode
from .isomorphism import (
    Embedding,
    canonical_form,
    canonical_graph,
    embedding_ok,
    find_embedding,
    is_isomorphic,
)
from .orderedness import (
    CycleWitness,
    OrderVerdict,
    SearchOutcome,
    SequenceError,
    canonical_sequences,
    count_canonical_sequences,
    find_cycle_through_in_order,
    find_hamiltonian_cycle_through_in_order,
    is_hamiltonian,
    is_k_ordered,
    is_k_ordered_hamiltonian,
)
from .symmetry import (
    Permutation,
    automorphism_group,
    cycle_orbit_count,
    disjoint_paths_of_length,
    enumerate_routes,
    is_n_transitive,
)
from .validation import validate_cycle_witness

__version__ = "0.1.0"

__all__ = [
    "DisconnectedGraphError",
    "Graph",
    "GraphConstructionError",
    "Graph6Error",
    "Embedding",
    "CycleWitness",
    "OrderVerdict",
    "SearchOutcome",
    "SequenceError",
    "Permutation",
    "build_family",
    "canonical_form",
    "canonical_graph",
    "canonical_sequences",
    "complete",
    "complete_bipartite",
    "count_at_distance",
    "count_canonical_sequences",
    "cycle_orbit_count",
    "degree_sequence",
    "diameter",
    "disjoint_paths_of_length",
    "distance",
    "dot_export",
    "embedding_ok",
    "enumerate_routes",
    "fano_incidence",
    "find_cycle_through_in_order",
    "find_embedding",
    "find_hamiltonian_cycle_through_in_order",
    "generalized_petersen",
    "girth",
    "graph6_decode",
    "graph6_encode",
    "graph_from_edges",
    "has_square",
    "has_triangle",
    "heawood",
    "is_connected",
    "is_hamiltonian",
    "is_isomorphic",
    "is_k_ordered",
    "is_k_ordered_hamiltonian",
    "is_n_transitive",
    "is_regular",
    "petersen",
    "star_graph",
    "torus_graph",
    "validate_cycle_witness",
    "vertex_connectivity",
]
