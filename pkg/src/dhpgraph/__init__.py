"""Double Hall property bipartite graphs: verification, covering cycles, extremal instances."""

from .dhp import DhpVerdict, check_dhp, check_dhp_general, is_dhp, max_deficiency_witness, two_neighborhood
from .errors import (
    GraphError,
    InstanceFormatError,
    InvariantError,
    PaperContradiction,
    PreconditionError,
    SamplingError,
    SizeCapError,
)
from .extremal import BinaryTreeSpec, binary_tree_dhp, check_lower_bound, complete_tree_dhp
from .factors import find_covering_two_factor, find_general_two_factor, find_lovasz_violation
from .graphs import BipartiteGraph, ColoredMultigraph, CycleFamily, Graph, to_colored_multigraph
from .instance import InstanceFile, emit_instance, export_dot, parse_instance, read_instance
from .sampling import sample_dhp
from .search import SearchConfig, SearchReport, search_counterexamples

__version__ = "0.1.0"

__all__ = [
    "DhpVerdict", "check_dhp", "check_dhp_general", "is_dhp", "max_deficiency_witness",
    "two_neighborhood", "GraphError", "InstanceFormatError", "InvariantError",
    "PaperContradiction", "PreconditionError", "SamplingError", "SizeCapError",
    "BinaryTreeSpec", "binary_tree_dhp", "check_lower_bound", "complete_tree_dhp",
    "find_covering_two_factor", "find_general_two_factor", "find_lovasz_violation",
    "BipartiteGraph", "ColoredMultigraph", "CycleFamily", "Graph", "to_colored_multigraph",
    "InstanceFile", "emit_instance", "export_dot", "parse_instance", "read_instance",
    "sample_dhp", "SearchConfig", "SearchReport", "search_counterexamples",
]
