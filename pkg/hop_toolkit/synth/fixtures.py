"""
Synthetic KB and corpus with planted document chains.

Every fact (subject, relation, object) gets a fresh subject whose
document starts a chain of bridge documents ending in a mention of the
object. Distractor documents hang off the subject document and mention
other objects of the same relation, so each sample has type-consistent
wrong candidates. An optional cue document is linked from the subject
document of many facts sharing one answer.
"""

import logging
import math
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

import numpy as np

from ..corpus.document import Document
from ..corpus.loader import Corpus, save_corpus
from ..exceptions import FixtureError
from ..graph.bipartite import BipartiteGraph, doc_node, entity_node
from ..kbmodel import KnowledgeBase, Triple, kb_to_dict
from ..utils.jsonio import read_json, write_json, write_jsonl

logger = logging.getLogger(__name__)

CUE_ENTITY = "cue"


@dataclass(frozen=True)
class FixtureSpec:
    """
    Shape of a synthetic fixture.

    Attributes:
        n_entities: Objects available per relation
        n_relations: Number of relations
        n_facts: Number of facts (train and test together)
        chain_lengths: Planted chain lengths in documents, drawn uniformly per fact
        distractors_per_fact: Wrong-object documents linked from each subject document
        cue_bias: Training facts sharing the cue document and its answer (0 = no cue)
        answer_skew: Zipf exponent of the answer distribution (0 = uniform)
        test_fraction: Share of facts put in the test split
        seed: Random seed
    """

    n_entities: int = 10
    n_relations: int = 1
    n_facts: int = 20
    chain_lengths: Tuple[int, ...] = (2, 3)
    distractors_per_fact: int = 2
    cue_bias: int = 0
    answer_skew: float = 0.0
    test_fraction: float = 0.0
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "chain_lengths", tuple(int(n) for n in self.chain_lengths))
        for name in ("n_entities", "n_relations", "n_facts"):
            if getattr(self, name) < 1:
                raise FixtureError(f"{name} must be at least 1, got {getattr(self, name)}")
        if not self.chain_lengths or min(self.chain_lengths) < 2:
            raise FixtureError("chain lengths must be at least 2 documents")
        if max(self.chain_lengths) > self.n_entities:
            raise FixtureError(
                f"chain length {max(self.chain_lengths)} exceeds n_entities={self.n_entities}"
            )
        if not 0 <= self.distractors_per_fact < self.n_entities:
            raise FixtureError(
                f"distractors_per_fact must be in [0, {self.n_entities}), "
                f"got {self.distractors_per_fact}"
            )
        if self.cue_bias < 0 or self.answer_skew < 0 or self.seed < 0:
            raise FixtureError("cue_bias, answer_skew and seed must be non-negative")
        if not 0 <= self.test_fraction < 1:
            raise FixtureError(f"test_fraction must be in [0, 1), got {self.test_fraction}")

    @property
    def n_test(self) -> int:
        return int(round(self.n_facts * self.test_fraction))

    @property
    def n_cue_test(self) -> int:
        if not self.cue_bias or not self.n_test:
            return 0
        return max(1, math.ceil(self.cue_bias * self.test_fraction))

    @classmethod
    def from_dict(cls, data: dict) -> "FixtureSpec":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise FixtureError(f"Unknown fixture spec keys: {', '.join(unknown)}")
        return cls(**data)

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "FixtureSpec":
        data = read_json(path)
        if not isinstance(data, dict):
            raise FixtureError(f"Fixture spec {path} must hold a JSON object")
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        data = asdict(self)
        data["chain_lengths"] = list(self.chain_lengths)
        return data


@dataclass(frozen=True)
class PlantedChain:
    """A fact and the document chain planted for it."""

    fact: Triple
    chain: Tuple[str, ...]
    split: str
    cue: bool = False

    def to_dict(self) -> dict:
        return {
            "subject": self.fact.subject,
            "relation": self.fact.relation,
            "object": self.fact.object,
            "chain": list(self.chain),
            "split": self.split,
            "cue": self.cue,
        }


@dataclass
class Fixture:
    kb: KnowledgeBase
    corpus: Corpus
    ground_truth: List[PlantedChain]
    splits: Dict[str, List[int]] = field(default_factory=dict)
    cue_doc: Optional[str] = None

    def split_kb(self, split: str) -> KnowledgeBase:
        """KB holding only the facts of one split."""
        return self.kb.restricted([self.kb.triples[i] for i in self.splits.get(split, [])])


def _doc_id(entity: str) -> str:
    return f"doc_{entity}"


def _object_id(relation: int, index: int) -> str:
    return f"obj{relation}x{index}"


def _zipf_weights(n: int, skew: float) -> np.ndarray:
    weights = 1.0 / np.arange(1, n + 1, dtype=float) ** skew
    return weights / weights.sum()


def generate_fixture(spec: FixtureSpec) -> Fixture:
    """
    Generate a KB and corpus following ``spec``.

    Raises:
        FixtureError: If the spec cannot be satisfied
    """
    rng = np.random.default_rng(spec.seed)
    n_test = spec.n_test
    n_train = spec.n_facts - n_test
    if n_train < spec.n_relations:
        raise FixtureError(
            f"{n_train} training facts cannot cover {spec.n_relations} relations"
        )

    relations = [f"relation_{j}" for j in range(spec.n_relations)]
    fact_relation = [i % spec.n_relations for i in range(spec.n_facts)]
    split_of = ["train"] * n_train + ["test"] * n_test

    cue_facts: Set[int] = set()
    if spec.cue_bias:
        train_r0 = [i for i in range(n_train) if fact_relation[i] == 0]
        test_r0 = [i for i in range(n_train, spec.n_facts) if fact_relation[i] == 0]
        if len(train_r0) < spec.cue_bias or len(test_r0) < spec.n_cue_test:
            raise FixtureError(
                f"cue_bias={spec.cue_bias} needs more facts of {relations[0]}"
            )
        cue_facts.update(int(i) for i in rng.choice(train_r0, size=spec.cue_bias, replace=False))
        if spec.n_cue_test:
            cue_facts.update(int(i) for i in rng.choice(test_r0, size=spec.n_cue_test, replace=False))
    cue_answer = _object_id(0, 0)

    weights = _zipf_weights(spec.n_entities, spec.answer_skew)
    objects: List[str] = [""] * spec.n_facts
    train_objects: Dict[int, Set[str]] = {}
    for i in range(n_train):
        j = fact_relation[i]
        obj = cue_answer if i in cue_facts else _object_id(j, int(rng.choice(spec.n_entities, p=weights)))
        objects[i] = obj
        train_objects.setdefault(j, set()).add(obj)
    for i in range(n_train, spec.n_facts):
        j = fact_relation[i]
        pool = sorted(train_objects[j])
        objects[i] = cue_answer if i in cue_facts else pool[int(rng.integers(len(pool)))]

    entities: Dict[str, Tuple[str, ...]] = {}
    for j in range(spec.n_relations):
        for k in range(spec.n_entities):
            entities[_object_id(j, k)] = (_object_id(j, k),)
    docs: List[Document] = []
    triples: List[Triple] = []
    ground_truth: List[PlantedChain] = []
    cue_doc = None
    if cue_facts:
        entities[CUE_ENTITY] = (CUE_ENTITY,)
        cue_doc = _doc_id(CUE_ENTITY)
        docs.append(Document.from_text(
            cue_doc, CUE_ENTITY, f"{CUE_ENTITY} is often seen with {cue_answer} .", CUE_ENTITY,
        ))

    for i in range(spec.n_facts):
        j = fact_relation[i]
        subject = f"subj{i}"
        length = int(rng.choice(spec.chain_lengths))
        bridges = [f"bridge{i}x{k}" for k in range(1, length)]
        candidates = sorted(train_objects[j] - {objects[i]})
        n_distract = min(spec.distractors_per_fact, len(candidates))
        wrong = [candidates[int(k)] for k in rng.choice(len(candidates), size=n_distract, replace=False)]
        distractors = [f"distract{i}x{k}" for k in range(n_distract)]

        for entity in [subject] + bridges + distractors:
            entities[entity] = (entity,)
        triples.append(Triple(subject, relations[j], objects[i]))

        links = [bridges[0]] + distractors + ([CUE_ENTITY] if i in cue_facts else [])
        docs.append(Document.from_text(
            _doc_id(subject), subject,
            f"{subject} is linked to {' and '.join(links)} .", subject,
        ))
        for k, bridge in enumerate(bridges):
            target = bridges[k + 1] if k + 1 < len(bridges) else objects[i]
            docs.append(Document.from_text(
                _doc_id(bridge), bridge, f"{bridge} leads to {target} .", bridge,
            ))
        for entity, obj in zip(distractors, wrong):
            docs.append(Document.from_text(
                _doc_id(entity), entity, f"{entity} leads to {obj} .", entity,
            ))

        chain = tuple(_doc_id(e) for e in [subject] + bridges)
        ground_truth.append(PlantedChain(triples[-1], chain, split_of[i], i in cue_facts))

    kb = KnowledgeBase(triples=tuple(triples), entities=entities, relations=tuple(relations))
    splits = {"train": list(range(n_train))}
    if n_test:
        splits["test"] = list(range(n_train, spec.n_facts))
    logger.info("Generated fixture: %d facts, %d documents, %d entities",
                len(triples), len(docs), len(entities))
    return Fixture(kb=kb, corpus=Corpus(docs), ground_truth=ground_truth,
                   splits=splits, cue_doc=cue_doc)


def write_fixture(fixture: Fixture, out_dir: Union[str, Path]) -> Dict[str, Path]:
    """
    Write a fixture in the standard input formats.

    Files: kb.json (all facts), kb_<split>.json per split, corpus.jsonl
    and ground_truth.jsonl.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = {"kb": write_json(out_dir / "kb.json", kb_to_dict(fixture.kb))}
    for split in fixture.splits:
        paths[f"kb_{split}"] = write_json(
            out_dir / f"kb_{split}.json", kb_to_dict(fixture.split_kb(split))
        )
    corpus_path = out_dir / "corpus.jsonl"
    save_corpus(fixture.corpus, corpus_path)
    paths["corpus"] = corpus_path
    truth_path = out_dir / "ground_truth.jsonl"
    write_jsonl(truth_path, (p.to_dict() for p in fixture.ground_truth))
    paths["ground_truth"] = truth_path
    return paths


def random_small_graph(
    seed: int,
    n_docs: int = 8,
    n_entities: int = 8,
    edge_prob: float = 0.25,
) -> BipartiteGraph:
    """
    Random bipartite graph for checking traversal against the oracle.

    Each possible doc->entity and entity->doc edge is drawn independently.
    Documents are d0..d{n-1}, entities e0..e{m-1}.
    """
    rng = np.random.default_rng(seed)
    graph = BipartiteGraph("random")
    for k in range(n_entities):
        graph.add_entity(f"e{k}")
    for d in range(n_docs):
        graph.add_document(f"d{d}")
    forward = rng.random((n_docs, n_entities)) < edge_prob
    backward = rng.random((n_entities, n_docs)) < edge_prob
    for d, k in zip(*np.nonzero(forward)):
        graph.add_edge(doc_node(f"d{d}"), entity_node(f"e{k}"))
    for k, d in zip(*np.nonzero(backward)):
        graph.add_edge(entity_node(f"e{k}"), doc_node(f"d{d}"))
    return graph
