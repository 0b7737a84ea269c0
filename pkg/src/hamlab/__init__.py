"""Imbalanced low-degree partitions of Hamming graphs, exact degree and
sensitivity of functions on finite grids, and brute-force verification
oracles."""

from .bounds import (
    BoundsReport,
    SubgraphStats,
    cayley_degree_bound,
    consistency_check,
    construction_degree_upper_bound,
    domination_threshold,
    markov_degree_lower_bound,
    subgraph_stats,
    theorem_imbalance_bound,
)
from .errors import (
    BoundNotApplicableError,
    ContractViolationError,
    DEFAULT_VERTEX_CAP,
    InvalidInputError,
    ResourceLimitError,
)
from .functions import (
    FiniteFunction,
    GridPolynomial,
    RestrictionWitness,
    SensitivityBoundReport,
    boolean_restriction_witness,
    degree,
    indicator_decomposition,
    interpolate,
    lifted_tribes,
    local_sensitivity,
    sensitivity,
    tribes,
    verify_sensitivity_bound,
)
from .graph import (
    GraphParams,
    VertexSet,
    hamming_distance,
    independence_number,
    induced_max_degree,
    iter_vertices,
    neighbors,
    rank,
    unrank,
)
from .oracle import (
    FunctionCheckReport,
    SearchBudget,
    brute_force_metrics,
    exhaustive_function_check,
    min_max_degree_subsets,
    sigma_exact,
)
from .partitions import (
    Partition,
    PartitionMetrics,
    block_sum_map,
    complete_graph_partition,
    coordinate_blocks,
    degree_one_partition,
    lift_partition,
    low_degree_subgraph,
    part_vertex_set,
    partition_metrics,
    theorem_partition,
)

__all__ = [name for name in dir() if not name.startswith("_")]
