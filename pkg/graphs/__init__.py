"""Multigraphs with loops, spanning trees, isomorphism and small-genus enumeration."""
from graphs.builtins import builtin_graph, default_tree
from graphs.enumeration import enumerate_trivalent
from graphs.isomorphism import are_isomorphic, canonical_form, pair_key, tree_classes
from graphs.multigraph import (
    Multigraph,
    SpanningTree,
    SplitComponent,
    betti,
    contract_split,
    is_loop_tree,
    is_trivalent,
    loop_tree,
    require_trivalent,
    spanning_trees,
    tree_subgraph,
)

__all__ = [
    "Multigraph",
    "SpanningTree",
    "SplitComponent",
    "are_isomorphic",
    "betti",
    "builtin_graph",
    "canonical_form",
    "contract_split",
    "default_tree",
    "enumerate_trivalent",
    "is_loop_tree",
    "is_trivalent",
    "loop_tree",
    "pair_key",
    "require_trivalent",
    "spanning_trees",
    "tree_classes",
    "tree_subgraph",
]
