"""Bipartite entity-document graph and its edge policies."""

from .bipartite import DOC, ENTITY, BipartiteGraph, Node, doc_node, entity_node, neighbors
from .builders import (
    BIOMEDICAL_RULES,
    ENCYCLOPEDIC_RULES,
    EdgeRule,
    build_biomedical_graph,
    build_encyclopedic_graph,
    build_graph,
    build_graph_from_rules,
    load_rules,
)
from .cache import GraphCache, load_graph, save_graph

__all__ = [
    "BIOMEDICAL_RULES",
    "BipartiteGraph",
    "DOC",
    "ENCYCLOPEDIC_RULES",
    "ENTITY",
    "EdgeRule",
    "GraphCache",
    "Node",
    "build_biomedical_graph",
    "build_encyclopedic_graph",
    "build_graph",
    "build_graph_from_rules",
    "doc_node",
    "entity_node",
    "load_graph",
    "load_rules",
    "neighbors",
    "save_graph",
]
