from polyadic.metrics.graph import (
    average_path_length,
    clustering_all,
    graph_clustering,
    graph_degree,
    path_length_summary,
)
from polyadic.metrics.homology import BettiReport, betti_numbers, boundary_rank
from polyadic.metrics.hypergraph import (
    extra_overlap,
    fill_coefficient,
    fill_coefficients,
    hyperdegree,
    hyperdegrees,
    hyperedge_cardinality,
    hypergraph_clustering,
    hypergraph_clustering_all,
)
from polyadic.metrics.simplicial import (
    ParticipationVector,
    dowker_dual,
    maximal_participation_all,
    maximal_simplex_participation,
    simplex_participation,
)
from polyadic.metrics.stats import SpearmanResult, spearman

__all__ = [
    "BettiReport", "ParticipationVector", "SpearmanResult",
    "average_path_length", "betti_numbers", "boundary_rank", "clustering_all",
    "dowker_dual", "extra_overlap", "fill_coefficient", "fill_coefficients",
    "graph_clustering", "graph_degree", "hyperdegree", "hyperdegrees",
    "hyperedge_cardinality", "hypergraph_clustering", "hypergraph_clustering_all",
    "maximal_participation_all", "maximal_simplex_participation",
    "path_length_summary", "simplex_participation", "spearman",
]
