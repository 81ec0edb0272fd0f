"""gwis: exact detection and characterization of unique maximum-weight
independent sets in vertex-weighted graphs.

Highlights: exact rational weights everywhere, an exhaustive oracle plus an
independent branch-and-bound solver, several uniqueness characterizations
with re-checkable witnesses, weight-perturbation stability margins, the two
hardness gadgets, and a combinatorial-auction front end.  See the README
for the file formats and the `gwis` command line.
"""

from .auctions import (
    AuctionInstance,
    AuctionOutcome,
    Bid,
    auction_from_graph,
    parse_auction,
    resolve_auction,
    serialize_auction,
    to_conflict_graph,
)
from .characterizations import (
    AlternateAlphaSet,
    BoundaryViolation,
    DeletionSurvivor,
    Method,
    UniquenessReport,
    Verdict,
    ViolatingSubset,
    Witness,
    check_lemma1,
    check_oracle,
    check_thm1,
    check_thm2_tree,
    check_thm3,
    check_thm4,
    check_unique_matching,
    max_pocket_set,
    recheck_witness,
)
from .errors import CapacityError, FormatError, GwisError, InputError
from .formats import (
    GraphDocument,
    parse_edge_weighted_graph,
    parse_graph,
    serialize_edge_weighted_graph,
    serialize_graph,
)
from .fuzz import CrossValidationReport, Disagreement, cross_validate
from .generate import (
    FuzzConfig,
    generate_random,
    random_edge_weighted_graph,
    random_graph,
    random_tree,
)
from .graph import (
    EdgeWeightedGraph,
    VertexSet,
    Weight,
    WeightedGraph,
    as_weight,
    line_graph,
)
from .perturbation import (
    PerturbationRadius,
    StabilityReport,
    compute_radius,
    sample_perturbation,
    verify_stability,
)
from .reductions import (
    Ui1Instance,
    Ui2Instance,
    reduce_ui1,
    reduce_ui2,
    verify_reduction_ui1,
    verify_reduction_ui2,
)
from .solver import (
    AlphaSetFamily,
    MwisResult,
    enumerate_alpha_sets,
    solve_bnb,
    solve_oracle,
    weighted_matching_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaSetFamily",
    "AlternateAlphaSet",
    "AuctionInstance",
    "AuctionOutcome",
    "Bid",
    "BoundaryViolation",
    "CapacityError",
    "CrossValidationReport",
    "DeletionSurvivor",
    "Disagreement",
    "EdgeWeightedGraph",
    "FormatError",
    "FuzzConfig",
    "GraphDocument",
    "GwisError",
    "InputError",
    "Method",
    "MwisResult",
    "PerturbationRadius",
    "StabilityReport",
    "Ui1Instance",
    "Ui2Instance",
    "UniquenessReport",
    "Verdict",
    "VertexSet",
    "ViolatingSubset",
    "Weight",
    "WeightedGraph",
    "Witness",
    "as_weight",
    "auction_from_graph",
    "check_lemma1",
    "check_oracle",
    "check_thm1",
    "check_thm2_tree",
    "check_thm3",
    "check_thm4",
    "check_unique_matching",
    "compute_radius",
    "cross_validate",
    "enumerate_alpha_sets",
    "generate_random",
    "line_graph",
    "max_pocket_set",
    "parse_auction",
    "parse_edge_weighted_graph",
    "parse_graph",
    "random_edge_weighted_graph",
    "random_graph",
    "random_tree",
    "recheck_witness",
    "reduce_ui1",
    "reduce_ui2",
    "resolve_auction",
    "sample_perturbation",
    "serialize_auction",
    "serialize_edge_weighted_graph",
    "serialize_graph",
    "solve_bnb",
    "solve_oracle",
    "to_conflict_graph",
    "verify_reduction_ui1",
    "verify_reduction_ui2",
    "verify_stability",
    "weighted_matching_oracle",
]
