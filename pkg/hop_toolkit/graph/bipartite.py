"""Directed bipartite entity-document graph."""

from typing import Dict, FrozenSet, Iterator, NamedTuple, Optional, Tuple

import networkx as nx

from ..exceptions import GraphBuildError, NodeNotFoundError

ENTITY = "entity"
DOC = "doc"


class Node(NamedTuple):
    """A graph node: ``kind`` is ENTITY or DOC, ``key`` the id."""

    kind: str
    key: str

    def __str__(self) -> str:
        return f"{self.kind}:{self.key}"


def entity_node(entity: str) -> Node:
    return Node(ENTITY, entity)


def doc_node(doc_id: str) -> Node:
    return Node(DOC, doc_id)


class BipartiteGraph:
    """
    Directed graph whose edges always join an entity and a document.

    Storage is a networkx DiGraph, which keeps successor and predecessor
    adjacency side by side. Entities and documents live in separate
    namespaces, so an entity and a document may share an id.
    """

    def __init__(self, policy_tag: str, graph: Optional[nx.DiGraph] = None):
        self.policy_tag = policy_tag
        self._g = graph if graph is not None else nx.DiGraph()

    def add_entity(self, entity: str) -> Node:
        node = entity_node(entity)
        self._g.add_node(node)
        return node

    def add_document(self, doc_id: str) -> Node:
        node = doc_node(doc_id)
        self._g.add_node(node)
        return node

    def add_edge(self, source: Node, target: Node) -> None:
        """
        Add a directed edge between existing nodes of different kinds.

        Raises:
            GraphBuildError: For entity-entity or doc-doc edges
            NodeNotFoundError: If an endpoint is not a node yet
        """
        if source.kind == target.kind:
            raise GraphBuildError(f"Edge {source} -> {target} joins two {source.kind} nodes")
        for node in (source, target):
            self._require(node)
        self._g.add_edge(source, target)

    def _require(self, node: Node) -> None:
        if node not in self._g:
            raise NodeNotFoundError(f"Node {node} is not part of the graph")

    def has_node(self, node: Node) -> bool:
        return node in self._g

    def has_edge(self, source: Node, target: Node) -> bool:
        return self._g.has_edge(source, target)

    def neighbors(self, node: Node) -> FrozenSet[Node]:
        """
        Outgoing adjacency of a node.

        Raises:
            NodeNotFoundError: If the node does not exist
        """
        self._require(node)
        return frozenset(self._g.successors(node))

    def predecessors(self, node: Node) -> FrozenSet[Node]:
        """Incoming adjacency of a node."""
        self._require(node)
        return frozenset(self._g.predecessors(node))

    def entity_docs(self, entity: str) -> FrozenSet[str]:
        """Documents an entity points to."""
        return frozenset(n.key for n in self.neighbors(entity_node(entity)))

    def doc_entities(self, doc_id: str) -> FrozenSet[str]:
        """Entities a document points to."""
        return frozenset(n.key for n in self.neighbors(doc_node(doc_id)))

    def docs_into(self, entity: str) -> FrozenSet[str]:
        """Documents pointing to an entity."""
        return frozenset(n.key for n in self.predecessors(entity_node(entity)))

    def entities_into(self, doc_id: str) -> FrozenSet[str]:
        """Entities pointing to a document."""
        return frozenset(n.key for n in self.predecessors(doc_node(doc_id)))

    def nodes(self, kind: Optional[str] = None) -> Iterator[Node]:
        for node in self._g.nodes:
            if kind is None or node.kind == kind:
                yield node

    def edges(self) -> Iterator[Tuple[Node, Node]]:
        return iter(self._g.edges)

    @property
    def number_of_documents(self) -> int:
        return sum(1 for _ in self.nodes(DOC))

    @property
    def number_of_entities(self) -> int:
        return sum(1 for _ in self.nodes(ENTITY))

    @property
    def number_of_edges(self) -> int:
        return self._g.number_of_edges()

    @property
    def doc_to_entities(self) -> Dict[str, FrozenSet[str]]:
        """Forward adjacency of every document."""
        return {n.key: self.doc_entities(n.key) for n in self.nodes(DOC)}

    @property
    def entity_to_docs(self) -> Dict[str, FrozenSet[str]]:
        """Forward adjacency of every entity."""
        return {n.key: self.entity_docs(n.key) for n in self.nodes(ENTITY)}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (
            self.policy_tag == other.policy_tag
            and set(self._g.nodes) == set(other._g.nodes)
            and set(self._g.edges) == set(other._g.edges)
        )

    def __repr__(self) -> str:
        return (
            f"BipartiteGraph(policy={self.policy_tag!r}, entities={self.number_of_entities}, "
            f"documents={self.number_of_documents}, edges={self.number_of_edges})"
        )


def neighbors(graph: BipartiteGraph, node: Node) -> FrozenSet[Node]:
    """Outgoing neighbours of ``node``; raises NodeNotFoundError for unknown nodes."""
    return graph.neighbors(node)
