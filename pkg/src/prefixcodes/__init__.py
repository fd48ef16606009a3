"""Minimum-expected-length binary prefix codes: construction, analysis,
node-swap transformations, synchronization, and brute-force verification."""

from .analysis import (
    MonotonicityWitness,
    PropertyReport,
    classify,
    improve_from_witness,
    is_complete,
    is_monotone,
    is_optimal,
    length_equivalent,
    strong_monotonicity_check,
)
from .core import (
    CodeTree,
    PrefixCode,
    Source,
    canonical_label,
    code_from_lengths,
    code_from_tree,
    expected_length,
    kraft_sum,
    tree_from_code,
)
from .huffman import (
    ChildOrder,
    Selector,
    SiblingListing,
    TiePolicy,
    huffman_build,
    huffman_enumerate,
    huffmanize,
    is_huffman,
    sibling_property,
    sibling_property_exhaustive,
)
from .oracle import (
    TreeEnumeration,
    VerificationReport,
    builtin_corpus,
    enumerate_complete_trees,
    min_expected_length,
    optimal_set,
    verify_theorems,
)
from .swaps import (
    ClosureResult,
    SwapKind,
    SwapMove,
    available_swaps,
    move_from_text,
    move_to_text,
    node_swap,
    replay,
    swap_closure,
    swap_equivalent,
)
from .sync import SyncResult, decoder_step, run_string, shortest_sync_string

__all__ = [
    "ChildOrder",
    "ClosureResult",
    "CodeTree",
    "MonotonicityWitness",
    "PrefixCode",
    "PropertyReport",
    "Selector",
    "SiblingListing",
    "Source",
    "SwapKind",
    "SwapMove",
    "SyncResult",
    "TiePolicy",
    "TreeEnumeration",
    "VerificationReport",
    "available_swaps",
    "builtin_corpus",
    "canonical_label",
    "classify",
    "code_from_lengths",
    "code_from_tree",
    "decoder_step",
    "enumerate_complete_trees",
    "expected_length",
    "huffman_build",
    "huffman_enumerate",
    "huffmanize",
    "improve_from_witness",
    "is_complete",
    "is_huffman",
    "is_monotone",
    "is_optimal",
    "kraft_sum",
    "length_equivalent",
    "min_expected_length",
    "move_from_text",
    "move_to_text",
    "node_swap",
    "optimal_set",
    "replay",
    "run_string",
    "shortest_sync_string",
    "sibling_property",
    "sibling_property_exhaustive",
    "strong_monotonicity_check",
    "swap_closure",
    "swap_equivalent",
    "tree_from_code",
    "verify_theorems",
]
