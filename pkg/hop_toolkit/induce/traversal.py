"""Breadth-first traversal from a query subject to its endpoints."""

import logging
from typing import AbstractSet, Dict, FrozenSet, List, Set

from ..exceptions import SubjectAbsentError
from ..graph.bipartite import BipartiteGraph, entity_node
from ..kbmodel import Query
from .sample import Chain, TraversalResult

logger = logging.getLogger(__name__)


def _distance_to_endpoints(
    graph: BipartiteGraph,
    endpoints: AbstractSet[str],
    max_chain: int,
) -> Dict[str, int]:
    """
    Fewest documents on a chain from each document to any endpoint.

    Walks the reverse adjacency; documents further than max_chain are
    left out.
    """
    dist: Dict[str, int] = {}
    frontier: List[str] = []
    for endpoint in endpoints:
        if not graph.has_node(entity_node(endpoint)):
            continue
        for doc in graph.docs_into(endpoint):
            if doc not in dist:
                dist[doc] = 1
                frontier.append(doc)

    depth = 1
    while frontier and depth < max_chain:
        depth += 1
        next_frontier: List[str] = []
        for doc in frontier:
            for entity in graph.entities_into(doc):
                for prev in graph.docs_into(entity):
                    if prev not in dist:
                        dist[prev] = depth
                        next_frontier.append(prev)
        frontier = next_frontier
    return dist


def traverse(
    graph: BipartiteGraph,
    q: Query,
    answer: str,
    endpoints: AbstractSet[str],
    max_chain: int = 3,
) -> TraversalResult:
    """
    Enumerate document chains from the query subject to endpoints.

    The search expands level by level (one document per level) from the
    documents the subject points to. A chain (d1, ..., dk) is extended
    to d(k+1) when some entity e has dk -> e -> d(k+1); chains never
    repeat a document. Prefixes that cannot reach an endpoint within
    max_chain documents are pruned using reverse-reachability distances.

    Args:
        graph: Bipartite graph
        q: Query; its subject is an entity id
        answer: Correct answer (must be in endpoints)
        endpoints: Entities at which chains may end
        max_chain: Maximum number of documents per chain

    Returns:
        TraversalResult with every simple chain of length <= max_chain

    Raises:
        SubjectAbsentError: If the subject is not a graph node
    """
    if not graph.has_node(entity_node(q.subject)):
        raise SubjectAbsentError(f"Subject '{q.subject}' of {q} is not in the graph")
    if answer not in endpoints:
        logger.debug("Answer %s is not among the endpoints of %s", answer, q)

    dist = _distance_to_endpoints(graph, endpoints, max_chain)
    successors: Dict[str, FrozenSet[str]] = {}

    def next_docs(doc: str) -> FrozenSet[str]:
        if doc not in successors:
            found: Set[str] = set()
            for entity in graph.doc_entities(doc):
                found.update(graph.entity_docs(entity))
            successors[doc] = frozenset(found)
        return successors[doc]

    paths: Dict[str, Set[Chain]] = {}
    frontier: List[Chain] = [
        (doc,) for doc in sorted(graph.entity_docs(q.subject))
        if dist.get(doc, max_chain + 1) <= max_chain
    ]
    length = 1
    while frontier:
        for chain in frontier:
            for entity in graph.doc_entities(chain[-1]) & endpoints:
                paths.setdefault(entity, set()).add(chain)
        if length == max_chain:
            break
        remaining = max_chain - length
        extended: List[Chain] = []
        for chain in frontier:
            for doc in sorted(next_docs(chain[-1])):
                if doc in chain or dist.get(doc, remaining + 1) > remaining:
                    continue
                extended.append(chain + (doc,))
        frontier = extended
        length += 1

    return TraversalResult(paths={e: frozenset(c) for e, c in paths.items()})
