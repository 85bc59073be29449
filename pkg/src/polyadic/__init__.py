"""Graphs, simplicial complexes and hypergraphs over shared relational data."""
from polyadic.core import (
    ConcurrenceMatrix,
    Graph,
    Hypergraph,
    LabelMap,
    SimplicialComplex,
    concurrence_matrix,
    graph_from_relations,
    hypergraph_from_relations,
    sc_contains_face,
    sc_from_relations,
    sc_k_faces,
)
from polyadic.errors import (
    BoundsError,
    ParseError,
    PolyadicError,
    RelationError,
    ResourceLimitError,
)

__version__ = "0.1.0"
