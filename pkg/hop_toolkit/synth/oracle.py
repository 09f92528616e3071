"""Exhaustive path enumeration used as a reference for traversal."""

from typing import AbstractSet, Dict, List, Set, Tuple

from ..exceptions import OracleSizeError
from ..graph.bipartite import DOC, BipartiteGraph, Node, doc_node, entity_node

MAX_ORACLE_DOCS = 12


def brute_force_paths(
    graph: BipartiteGraph,
    subject: str,
    endpoints: AbstractSet[str],
    max_chain: int,
) -> Dict[str, Set[Tuple[str, ...]]]:
    """
    All simple document chains of at most ``max_chain`` documents from
    ``subject`` to each endpoint, by plain depth-first search.

    Raises:
        OracleSizeError: If the graph has more than MAX_ORACLE_DOCS documents
    """
    n_docs = sum(1 for _ in graph.nodes(DOC))
    if n_docs > MAX_ORACLE_DOCS:
        raise OracleSizeError(
            f"Graph has {n_docs} documents; exhaustive enumeration allows at most {MAX_ORACLE_DOCS}"
        )

    found: Dict[str, Set[Tuple[str, ...]]] = {}

    def visit(chain: List[str]) -> None:
        last: Node = doc_node(chain[-1])
        for entity in graph.neighbors(last):
            if entity.key in endpoints:
                found.setdefault(entity.key, set()).add(tuple(chain))
        if len(chain) == max_chain:
            return
        for entity in graph.neighbors(last):
            for doc in graph.neighbors(entity):
                if doc.key not in chain:
                    visit(chain + [doc.key])

    start = entity_node(subject)
    if not graph.has_node(start):
        return found
    for doc in graph.neighbors(start):
        visit([doc.key])
    return found
