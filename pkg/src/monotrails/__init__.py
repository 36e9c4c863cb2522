"""Longest strictly increasing/decreasing trails in edge-weighted graphs.

The core pieces:

- graphs: weighted undirected graphs with pairwise-distinct positive
  weights, generators, validation, and the edge-list file format.
- trails: ordered-trail predicates and the reverse/swap duality between
  decreasing and increasing trails.
- labeling: the label-propagation algorithm for longest ordered trails,
  with per-vertex witness reconstruction.
- oracle: brute-force enumeration used as ground truth in tests.
- extremal: minimum guaranteed trail length over all weightings of a
  structure, exhaustive or sampled, with optional symmetry reduction.
"""

__version__ = "0.1.0"

from .errors import MonotrailsError
from .extremal import (
    BoundCheck,
    Exhaustive,
    ExtremalReport,
    Sampled,
    Structure,
    check_lower_bound,
    complete_structure,
    min_over_weightings,
    structure_of,
)
from .graphs import (
    Mode,
    Violation,
    WeightedGraph,
    add_edge,
    complete_graph,
    edge_key,
    is_valid,
    new_graph,
    parse_edge_list,
    random_graph,
    ranked_edges,
    render_edge_list,
    validate,
    weighted_subgraph,
)
from .labeling import (
    LabelState,
    TrailReport,
    find_edge_by_rank,
    get_label,
    initial_state,
    label_state_at,
    longest_ordered_trail,
    propagate_step,
    run_labeling_sorted,
)
from .oracle import EnumerationResult, brute_force_longest, enumerate_dec_trails_from
from .trails import (
    Order,
    Step,
    Trail,
    drop_prefix,
    is_ordered_trail,
    is_ordered_walk,
    reverse_dual,
    trail_json,
)

__all__ = [
    "BoundCheck",
    "EnumerationResult",
    "Exhaustive",
    "ExtremalReport",
    "LabelState",
    "Mode",
    "MonotrailsError",
    "Order",
    "Sampled",
    "Step",
    "Structure",
    "Trail",
    "TrailReport",
    "Violation",
    "WeightedGraph",
    "add_edge",
    "brute_force_longest",
    "check_lower_bound",
    "complete_graph",
    "complete_structure",
    "drop_prefix",
    "edge_key",
    "enumerate_dec_trails_from",
    "find_edge_by_rank",
    "get_label",
    "initial_state",
    "is_ordered_trail",
    "is_ordered_walk",
    "is_valid",
    "label_state_at",
    "longest_ordered_trail",
    "min_over_weightings",
    "new_graph",
    "parse_edge_list",
    "propagate_step",
    "random_graph",
    "ranked_edges",
    "render_edge_list",
    "reverse_dual",
    "run_labeling_sorted",
    "structure_of",
    "trail_json",
    "validate",
    "weighted_subgraph",
]
