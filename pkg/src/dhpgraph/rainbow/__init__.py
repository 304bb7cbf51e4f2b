"""Rainbow Hamiltonian cycles in colored multigraphs and the tools around them."""

from .cover import Deg2nConstruction, cover_cycle_deg_2n, deg2n_construction, small_color_graph
from .hamiltonian import (
    HamiltonSearchResult,
    RainbowCycle,
    covering_cycle,
    find_rainbow_hamiltonian_cycle,
    rainbow_cycle_oracle,
    rainbow_hamiltonian_search,
)
from .orientation import (
    Orientation,
    ThinnedColoring,
    afr_precondition,
    balanced_orientation,
    thin_colors,
    thinning_bound,
)
from .paths import (
    EdgeColoredGraph,
    PathPartition,
    RainbowPath,
    double_factorial_bound,
    find_rainbow_path,
    independence_number,
    maximum_independent_set,
    min_path_partition_size,
    minimal_span_slack,
    path_partition_gallai_milgram,
    rainbow_path_search,
    span_condition_witness,
)

__all__ = [
    "Deg2nConstruction", "cover_cycle_deg_2n", "deg2n_construction", "small_color_graph",
    "HamiltonSearchResult", "RainbowCycle", "covering_cycle", "find_rainbow_hamiltonian_cycle",
    "rainbow_cycle_oracle", "rainbow_hamiltonian_search", "Orientation", "ThinnedColoring",
    "afr_precondition", "balanced_orientation", "thin_colors", "thinning_bound",
    "EdgeColoredGraph", "PathPartition", "RainbowPath", "double_factorial_bound",
    "find_rainbow_path", "independence_number", "maximum_independent_set",
    "min_path_partition_size", "minimal_span_slack", "path_partition_gallai_milgram",
    "rainbow_path_search", "span_condition_witness",
]
