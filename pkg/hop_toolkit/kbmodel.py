"""Knowledge base model: facts, queries, candidate pools and endpoints.

Entities are identified by opaque ids; name variants are attached to the
id and never substitute for it. Candidate pools are read off the facts of
the training split, which callers pass in as ``pool`` when inducing any
other split.
"""

import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Set, Tuple, Union

from .exceptions import ConfigError, KBError

logger = logging.getLogger(__name__)

EntityId = str
RelationId = str


@dataclass(frozen=True, order=True)
class Triple:
    """A fact (subject, relation, object)."""

    subject: EntityId
    relation: RelationId
    object: EntityId


@dataclass(frozen=True, order=True)
class Query:
    """
    A fact with its object slot left empty: (subject, relation, ?).

    ``subject`` holds an entity id while inducing; dataset samples carry the
    subject's surface form instead (see ``Sample``).
    """

    subject: str
    relation: RelationId

    @classmethod
    def from_triple(cls, triple: Triple) -> "Query":
        return cls(subject=triple.subject, relation=triple.relation)

    def __str__(self) -> str:
        return f"({self.subject}, {self.relation}, ?)"


@dataclass(frozen=True)
class KnowledgeBase:
    """
    Immutable knowledge base.

    Attributes:
        triples: Facts in input order
        entities: Entity id -> name variants (first variant is the surface form)
        relations: Known relation ids
        drug_targets: Drug id -> target protein ids (biomedical policy)
        ppi: Interacting protein pairs (biomedical policy)
    """

    triples: Tuple[Triple, ...] = ()
    entities: Mapping[EntityId, Tuple[str, ...]] = field(default_factory=dict)
    relations: Tuple[RelationId, ...] = ()
    drug_targets: Optional[Mapping[EntityId, FrozenSet[EntityId]]] = None
    ppi: Optional[FrozenSet[Tuple[EntityId, EntityId]]] = None

    @property
    def has_auxiliary_tables(self) -> bool:
        """True when both biomedical tables are present."""
        return self.drug_targets is not None and self.ppi is not None

    @cached_property
    def objects_by_relation(self) -> Dict[RelationId, FrozenSet[EntityId]]:
        """Relation -> set of all objects observed with it."""
        pools: Dict[RelationId, Set[EntityId]] = {}
        for triple in self.triples:
            pools.setdefault(triple.relation, set()).add(triple.object)
        return {r: frozenset(objs) for r, objs in pools.items()}

    @cached_property
    def objects_by_query(self) -> Dict[Tuple[EntityId, RelationId], FrozenSet[EntityId]]:
        """(subject, relation) -> all true objects."""
        index: Dict[Tuple[EntityId, RelationId], Set[EntityId]] = {}
        for triple in self.triples:
            index.setdefault((triple.subject, triple.relation), set()).add(triple.object)
        return {k: frozenset(v) for k, v in index.items()}

    @cached_property
    def proteins(self) -> FrozenSet[EntityId]:
        """Entities occurring as drug targets or in protein interactions."""
        found: Set[EntityId] = set()
        for targets in (self.drug_targets or {}).values():
            found.update(targets)
        for a, b in self.ppi or ():
            found.add(a)
            found.add(b)
        return frozenset(found)

    @cached_property
    def interaction_partners(self) -> Dict[EntityId, FrozenSet[EntityId]]:
        """Protein -> interacting proteins (interactions are symmetric)."""
        partners: Dict[EntityId, Set[EntityId]] = {}
        for a, b in self.ppi or ():
            if a == b:
                continue
            partners.setdefault(a, set()).add(b)
            partners.setdefault(b, set()).add(a)
        return {p: frozenset(v) for p, v in partners.items()}

    def names(self, entity: EntityId) -> Tuple[str, ...]:
        """Name variants of an entity (empty for unknown ids)."""
        return tuple(self.entities.get(entity, ()))

    def surface_form(self, entity: EntityId) -> str:
        """Surface string of an entity: its first listed name variant."""
        names = self.entities.get(entity)
        if not names:
            return entity
        return names[0]

    def restricted(self, triples: Sequence[Triple]) -> "KnowledgeBase":
        """Same registries, different fact list (used for split views)."""
        return KnowledgeBase(
            triples=tuple(triples),
            entities=self.entities,
            relations=self.relations,
            drug_targets=self.drug_targets,
            ppi=self.ppi,
        )


@dataclass(frozen=True)
class Finding:
    """One validation problem."""

    kind: str
    detail: str


@dataclass
class ValidationReport:
    """Result of validate_kb; an empty report means the KB is valid."""

    findings: List[Finding] = field(default_factory=list)

    def __bool__(self) -> bool:
        return bool(self.findings)

    def __len__(self) -> int:
        return len(self.findings)

    def by_kind(self, kind: str) -> List[Finding]:
        return [f for f in self.findings if f.kind == kind]

    def summary(self, limit: int = 5) -> str:
        """Human-readable digest of the first findings."""
        lines = [f"{f.kind}: {f.detail}" for f in self.findings[:limit]]
        if len(self.findings) > limit:
            lines.append(f"... and {len(self.findings) - limit} more")
        return "\n".join(lines)


def queries_from_kb(kb: KnowledgeBase) -> List[Tuple[Query, EntityId]]:
    """One (query, answer) pair per fact, in fact order."""
    return [(Query.from_triple(t), t.object) for t in kb.triples]


def type_consistent_candidates(
    kb: KnowledgeBase,
    relation: RelationId,
) -> FrozenSet[EntityId]:
    """
    All entities observed as object of a fact with the given relation.

    Pass the training split's KB to keep candidate pools free of
    dev/test facts.

    Raises:
        ConfigError: If the relation is unknown to the KB
    """
    if relation not in kb.relations and relation not in kb.objects_by_relation:
        raise ConfigError(f"Relation '{relation}' is not part of the knowledge base")
    return kb.objects_by_relation.get(relation, frozenset())


def endpoint_set(
    kb: KnowledgeBase,
    q: Query,
    answer: EntityId,
    pool: Optional[KnowledgeBase] = None,
) -> FrozenSet[EntityId]:
    """
    Traversal end points for a (query, answer) pair.

    Type-consistent candidates minus the other true objects of the query
    (closed-world assumption) minus the query subject itself.

    Args:
        kb: Knowledge base holding the query's facts
        q: Query (subject given as entity id)
        answer: Correct object
        pool: KB whose facts define type consistency (defaults to kb)

    Raises:
        KBError: If the answer is not type-consistent
    """
    candidates = type_consistent_candidates(pool or kb, q.relation)
    if answer not in candidates:
        raise KBError(
            f"Answer '{answer}' of {q} is not a type-consistent candidate"
        )
    alternates = kb.objects_by_query.get((q.subject, q.relation), frozenset())
    if pool is not None:
        alternates = alternates | pool.objects_by_query.get((q.subject, q.relation), frozenset())
    excluded = (alternates - {answer}) | {q.subject}
    return frozenset(candidates - excluded)


def validate_kb(kb: KnowledgeBase) -> ValidationReport:
    """
    Check a KB for duplicate facts, dangling references and empty names.

    Returns:
        ValidationReport (empty when the KB is valid)
    """
    report = ValidationReport()
    relations = set(kb.relations)

    for triple, count in Counter(kb.triples).items():
        if count > 1:
            report.findings.append(Finding(
                "duplicate_triple",
                f"({triple.subject}, {triple.relation}, {triple.object}) x{count}",
            ))

    for index, triple in enumerate(kb.triples):
        for role in ("subject", "object"):
            entity = getattr(triple, role)
            if entity not in kb.entities:
                report.findings.append(Finding(
                    "dangling_entity", f"triple {index}: unknown {role} '{entity}'"
                ))
        if triple.relation not in relations:
            report.findings.append(Finding(
                "dangling_relation", f"triple {index}: unknown relation '{triple.relation}'"
            ))

    for entity, names in kb.entities.items():
        if not entity:
            report.findings.append(Finding("empty_entity_id", "entity with empty id"))
        if not names:
            report.findings.append(Finding("empty_names", f"entity '{entity}' has no names"))
        elif any(not str(n).strip() for n in names):
            report.findings.append(Finding("empty_names", f"entity '{entity}' has an empty name"))

    for drug, targets in (kb.drug_targets or {}).items():
        for entity in (drug, *sorted(targets)):
            if entity not in kb.entities:
                report.findings.append(Finding(
                    "dangling_entity", f"drug_targets: unknown entity '{entity}'"
                ))
    for a, b in sorted(kb.ppi or ()):
        for entity in (a, b):
            if entity not in kb.entities:
                report.findings.append(Finding(
                    "dangling_entity", f"ppi: unknown entity '{entity}'"
                ))

    return report


def kb_from_dict(data: Mapping) -> KnowledgeBase:
    """
    Build a KB from its JSON object form.

    Raises:
        KBError: If required fields are missing or malformed
    """
    if not isinstance(data, Mapping):
        raise KBError("KB document must be a JSON object")
    try:
        entities = {
            str(eid): tuple(str(n) for n in record["names"])
            for eid, record in data["entities"].items()
        }
        relations = tuple(str(r) for r in data["relations"])
        triples = tuple(Triple(str(s), str(r), str(o)) for s, r, o in data["triples"])
        drug_targets = None
        if data.get("drug_targets") is not None:
            drug_targets = {
                str(d): frozenset(str(t) for t in targets)
                for d, targets in data["drug_targets"].items()
            }
        ppi = None
        if data.get("ppi") is not None:
            ppi = frozenset((str(a), str(b)) for a, b in data["ppi"])
    except KeyError as e:
        raise KBError(f"KB is missing field {e}") from e
    except (TypeError, ValueError, AttributeError) as e:
        raise KBError(f"KB is malformed: {e}") from e

    return KnowledgeBase(
        triples=triples,
        entities=entities,
        relations=relations,
        drug_targets=drug_targets,
        ppi=ppi,
    )


def kb_to_dict(kb: KnowledgeBase) -> Dict:
    """JSON object form of a KB (inverse of kb_from_dict)."""
    data: Dict = {
        "entities": {eid: {"names": list(names)} for eid, names in kb.entities.items()},
        "relations": list(kb.relations),
        "triples": [[t.subject, t.relation, t.object] for t in kb.triples],
    }
    if kb.drug_targets is not None:
        data["drug_targets"] = {d: sorted(t) for d, t in kb.drug_targets.items()}
    if kb.ppi is not None:
        data["ppi"] = [list(pair) for pair in sorted(kb.ppi)]
    return data


def load_kb(path: Union[str, Path]) -> KnowledgeBase:
    """
    Read a KB JSON file.

    Raises:
        KBError: If the file cannot be read or parsed
    """
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
        raise KBError(f"Cannot load KB from {path}: {e}") from e
    kb = kb_from_dict(data)
    logger.info("Loaded KB %s: %d entities, %d facts", path, len(kb.entities), len(kb.triples))
    return kb
