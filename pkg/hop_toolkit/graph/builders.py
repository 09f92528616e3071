"""
Edge policies.

Every policy is a list of declarative ``EdgeRule`` values run by one rule
engine. The encyclopedic and biomedical policies are fixed rule lists;
the custom policy reads its list from a JSON file, so a new domain only
needs a rule file.
"""

import json
import logging
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple, Union

from ..config.pipeline import PipelineConfig
from ..config.policies import EdgePolicy
from ..corpus.document import Document
from ..corpus.loader import Corpus
from ..exceptions import ConfigError, GraphBuildError
from ..kbmodel import KnowledgeBase
from .bipartite import DOC, ENTITY, BipartiteGraph, doc_node, entity_node

logger = logging.getLogger(__name__)

CONDITIONS = ("mentions", "mentions_table_partner", "canonical")
TABLES = ("drug_targets", "ppi")
ENTITY_SETS = ("any", "proteins", "drugs")


@dataclass(frozen=True)
class EdgeRule:
    """
    One edge-generating rule relating documents and entities.

    Attributes:
        source_kind: 'doc' or 'entity'; the other end is the other kind
        condition: 'mentions' (doc mentions entity), 'canonical' (doc is
            the entity's canonical document) or 'mentions_table_partner'
            (doc mentions some table partner of the entity)
        entity_set: Entities the rule applies to: 'any', 'proteins' or 'drugs'
        table: Auxiliary table for 'mentions_table_partner'
        require_self_mention: Entity must also be mentioned by the doc
        bidirectional: Add the reverse edge as well
    """

    source_kind: str
    condition: str
    entity_set: str = "any"
    table: Optional[str] = None
    require_self_mention: bool = False
    bidirectional: bool = False

    def __post_init__(self):
        if self.source_kind not in (DOC, ENTITY):
            raise ConfigError(f"source_kind must be '{DOC}' or '{ENTITY}', got {self.source_kind!r}")
        if self.condition not in CONDITIONS:
            raise ConfigError(f"Unknown condition {self.condition!r}. Valid: {', '.join(CONDITIONS)}")
        if self.entity_set not in ENTITY_SETS:
            raise ConfigError(f"Unknown entity_set {self.entity_set!r}. Valid: {', '.join(ENTITY_SETS)}")
        if self.condition == "mentions_table_partner":
            if self.table not in TABLES:
                raise ConfigError(f"Condition {self.condition!r} needs table in {', '.join(TABLES)}")
        elif self.table is not None:
            raise ConfigError(f"Condition {self.condition!r} takes no table")

    @property
    def target_kind(self) -> str:
        return ENTITY if self.source_kind == DOC else DOC

    @property
    def needs_tables(self) -> bool:
        return self.table is not None or self.entity_set in ("proteins", "drugs")

    @classmethod
    def from_dict(cls, data: dict) -> "EdgeRule":
        if not isinstance(data, dict):
            raise ConfigError(f"Edge rule must be an object, got {data!r}")
        data = dict(data)
        target = data.pop("target_kind", None)
        try:
            rule = cls(**data)
        except TypeError as e:
            raise ConfigError(f"Invalid edge rule {data!r}: {e}") from e
        if target is not None and target != rule.target_kind:
            raise ConfigError(f"Edge rule {data!r} must join a document and an entity")
        return rule

    def to_dict(self) -> dict:
        data = asdict(self)
        data["target_kind"] = self.target_kind
        return data


ENCYCLOPEDIC_RULES: Tuple[EdgeRule, ...] = (
    EdgeRule(DOC, "mentions"),
    EdgeRule(ENTITY, "canonical"),
)

BIOMEDICAL_RULES: Tuple[EdgeRule, ...] = (
    EdgeRule(DOC, "mentions", entity_set="proteins"),
    EdgeRule(DOC, "mentions_table_partner", entity_set="drugs", table="drug_targets",
             bidirectional=True),
    EdgeRule(ENTITY, "mentions_table_partner", entity_set="proteins", table="ppi",
             require_self_mention=True),
)

DRUG_NAME_RULE = EdgeRule(DOC, "mentions", entity_set="drugs", bidirectional=True)


def load_rules(path: Union[str, Path]) -> List[EdgeRule]:
    """
    Read a custom rule file: a JSON list of rules or {"rules": [...]}.

    Raises:
        ConfigError: If the file is unreadable or a rule is invalid
    """
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"Cannot read rule file {path}: {e}") from e
    if isinstance(data, dict):
        data = data.get("rules")
    if not isinstance(data, list) or not data:
        raise ConfigError(f"Rule file {path} must hold a non-empty list of rules")
    return [EdgeRule.from_dict(item) for item in data]


class _RuleContext:
    """Per-build lookups shared by all rules."""

    def __init__(self, kb: KnowledgeBase):
        self.kb = kb
        self.drugs: FrozenSet[str] = frozenset((kb.drug_targets or {}).keys())
        self.proteins = kb.proteins
        self.partners: Dict[str, Dict[str, FrozenSet[str]]] = {
            "drug_targets": {d: frozenset(t) for d, t in (kb.drug_targets or {}).items()},
            "ppi": dict(kb.interaction_partners),
        }
        # partner -> entities having it as partner, per table
        self.inverse: Dict[str, Dict[str, Set[str]]] = {}
        for table, mapping in self.partners.items():
            inverse: Dict[str, Set[str]] = {}
            for entity, partners in mapping.items():
                for partner in partners:
                    inverse.setdefault(partner, set()).add(entity)
            self.inverse[table] = inverse

    def in_set(self, entity: str, entity_set: str) -> bool:
        if entity not in self.kb.entities:
            return False
        if entity_set == "proteins":
            return entity in self.proteins
        if entity_set == "drugs":
            return entity in self.drugs
        return True


def _related_entities(rule: EdgeRule, doc: Document, ctx: _RuleContext) -> Set[str]:
    """Entities the rule relates to ``doc``."""
    mentioned = doc.mentioned_entities()
    if rule.condition == "mentions":
        related = set(mentioned)
    elif rule.condition == "canonical":
        related = {doc.canonical_entity} if doc.canonical_entity is not None else set()
    else:
        inverse = ctx.inverse[rule.table]
        related = set()
        for partner in mentioned:
            related.update(inverse.get(partner, ()))
        if rule.require_self_mention:
            related &= mentioned
    return {e for e in related if ctx.in_set(e, rule.entity_set)}


def build_graph_from_rules(
    corpus: Corpus,
    kb: KnowledgeBase,
    rules: Sequence[EdgeRule],
    policy_tag: str = EdgePolicy.CUSTOM.value,
) -> BipartiteGraph:
    """
    Run a rule list over every document.

    Raises:
        ConfigError: If a rule needs auxiliary tables the KB lacks
        GraphBuildError: If two documents claim the same canonical entity
    """
    if not rules:
        raise ConfigError("At least one edge rule is required")
    if any(rule.needs_tables for rule in rules) and not kb.has_auxiliary_tables:
        raise ConfigError(
            "Edge rules use drug_targets/ppi tables, but the knowledge base has none"
        )

    graph = BipartiteGraph(policy_tag)
    for entity in kb.entities:
        graph.add_entity(entity)
    for doc in corpus:
        graph.add_document(doc.doc_id)

    if any(rule.condition == "canonical" for rule in rules):
        _check_canonical(corpus)

    ctx = _RuleContext(kb)
    unknown: Set[str] = set()
    for doc in corpus:
        unknown.update(doc.mentioned_entities() - kb.entities.keys())
        d = doc_node(doc.doc_id)
        for rule in rules:
            for entity in sorted(_related_entities(rule, doc, ctx)):
                e = entity_node(entity)
                if rule.source_kind == DOC:
                    graph.add_edge(d, e)
                else:
                    graph.add_edge(e, d)
                if rule.bidirectional:
                    if rule.source_kind == DOC:
                        graph.add_edge(e, d)
                    else:
                        graph.add_edge(d, e)

    if unknown:
        logger.warning("Ignored mentions of %d entities missing from the KB", len(unknown))
    logger.info("Built %r", graph)
    return graph


def _check_canonical(corpus: Iterable[Document]) -> None:
    owners: Dict[str, str] = {}
    for doc in corpus:
        entity = doc.canonical_entity
        if entity is None:
            continue
        if entity in owners:
            raise GraphBuildError(
                f"Documents '{owners[entity]}' and '{doc.doc_id}' both claim "
                f"canonical entity '{entity}'"
            )
        owners[entity] = doc.doc_id


def build_encyclopedic_graph(corpus: Corpus, kb: KnowledgeBase) -> BipartiteGraph:
    """
    Documents point to the entities they mention; entities point only to
    their canonical document.

    Raises:
        GraphBuildError: If two documents share a canonical entity
    """
    return build_graph_from_rules(corpus, kb, ENCYCLOPEDIC_RULES, EdgePolicy.ENCYCLOPEDIC.value)


def build_biomedical_graph(
    corpus: Corpus,
    kb: KnowledgeBase,
    drug_name_edges: bool = False,
) -> BipartiteGraph:
    """
    Drug-protein-document graph.

    A document points to every protein it mentions; a document and a
    drug are joined both ways when the document mentions one of the
    drug's targets; a protein points to a document mentioning both the
    protein and one of its interaction partners.

    Args:
        corpus: Annotated corpus
        kb: KB carrying drug_targets and ppi tables
        drug_name_edges: Also join documents and drugs they mention by name

    Raises:
        ConfigError: If the auxiliary tables are missing
    """
    if not kb.has_auxiliary_tables:
        raise ConfigError("Biomedical edge policy requires drug_targets and ppi tables in the KB")
    rules = list(BIOMEDICAL_RULES)
    if drug_name_edges:
        rules.append(DRUG_NAME_RULE)
    return build_graph_from_rules(corpus, kb, rules, EdgePolicy.BIOMEDICAL.value)


def build_graph(corpus: Corpus, kb: KnowledgeBase, config: PipelineConfig) -> BipartiteGraph:
    """Build the graph for the configured edge policy."""
    if config.policy is EdgePolicy.ENCYCLOPEDIC:
        return build_encyclopedic_graph(corpus, kb)
    if config.policy is EdgePolicy.BIOMEDICAL:
        return build_biomedical_graph(corpus, kb, drug_name_edges=config.drug_name_edges)
    return build_graph_from_rules(corpus, kb, load_rules(config.rules_path))
