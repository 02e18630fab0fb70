"""Perfect-forest generalizations in digraphs: verifiers, the polynomial
gadget decider, transformation lemmas, the 3DM hardness reduction, and
brute-force oracles."""

from .construct import (
    ArcSet,
    GadgetCorrespondence,
    build_gadget,
    construct_for_single_initial,
    decide_weak,
    even_tree_to_weak,
    forest_to_matching,
    matching_to_arcset,
    perfect_forest_undirected,
    remove_cycles,
    weak_to_almost,
)
from .forests import (
    ArcClass,
    ForestKind,
    OutForest,
    VerificationReport,
    classify_arc,
    extract_perfect_forest,
    format_forest,
    parse_forest,
    verify,
)
from .graphs import (
    ConnectivityClass,
    Digraph,
    OutTree,
    UGraph,
    bidirect,
    classify,
    find_universal_root,
    format_digraph,
    format_ugraph,
    parse_digraph,
    parse_ugraph,
    spanning_out_tree,
    strongly_connected_components,
    underlying_graph,
)
from .hardness import (
    ReductionMap,
    ThreeDMInstance,
    embed_solution,
    extract_solution,
    format_3dm,
    parse_3dm,
    reduce_3dm,
)
from .matching import Matching, has_perfect_matching, maximum_matching
from .oracle import (
    OracleBudget,
    brute_force_3dm,
    enumerate_digraphs,
    enumerate_ugraphs,
    oracle_forest,
    oracle_matching,
    sample_digraphs,
    sample_ugraphs,
)

__all__ = [
    "ArcClass",
    "ArcSet",
    "ConnectivityClass",
    "Digraph",
    "ForestKind",
    "GadgetCorrespondence",
    "Matching",
    "OracleBudget",
    "OutForest",
    "OutTree",
    "ReductionMap",
    "ThreeDMInstance",
    "UGraph",
    "VerificationReport",
    "bidirect",
    "brute_force_3dm",
    "build_gadget",
    "classify",
    "classify_arc",
    "construct_for_single_initial",
    "decide_weak",
    "embed_solution",
    "enumerate_digraphs",
    "enumerate_ugraphs",
    "even_tree_to_weak",
    "extract_perfect_forest",
    "extract_solution",
    "find_universal_root",
    "forest_to_matching",
    "format_3dm",
    "format_digraph",
    "format_forest",
    "format_ugraph",
    "has_perfect_matching",
    "matching_to_arcset",
    "maximum_matching",
    "oracle_forest",
    "oracle_matching",
    "parse_3dm",
    "parse_digraph",
    "parse_forest",
    "parse_ugraph",
    "perfect_forest_undirected",
    "reduce_3dm",
    "remove_cycles",
    "sample_digraphs",
    "sample_ugraphs",
    "spanning_out_tree",
    "strongly_connected_components",
    "underlying_graph",
    "verify",
    "weak_to_almost",
]
