"""Liar's vertex-edge domination on unit disk graphs."""

__version__ = "0.1.0"

from .domination import (
    BudgetExceeded,
    DominationScope,
    InfeasibleScope,
    OracleResult,
    Verdict,
    brute_force_min_lveds,
    maximal_independent_set,
    min_lveds_search,
    three_layer_mis_lveds,
    three_layers,
    verify_lveds,
)
from .generate import GeneratorError, GeneratorSpec, generate_random_instance
from .geom import (
    GraphDomainError,
    PointFormatError,
    UnitDiskGraph,
    build_unit_disk_graph,
    closed_edge_neighborhood,
    closed_neighborhood,
    hop_distance,
    r_ball,
    read_points,
    write_points,
)
from .ptas import (
    PtasConfig,
    PtasResult,
    SeparatedCollection,
    build_two_separated_collection,
    grow_radius,
    local_optimal_lveds,
    ptas_min_lveds,
)
from .reduction import (
    EmbeddingError,
    OrthogonalEmbedding,
    ReductionError,
    ReductionInstance,
    build_reduction_instance,
    load_embedding,
    lveds_to_vertex_cover,
    shipped_embedding,
    validate_embedding,
    vertex_cover_to_lveds,
)

__all__ = [name for name in dir() if not name.startswith("_")]
