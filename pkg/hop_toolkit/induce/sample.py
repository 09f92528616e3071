"""Traversal results, samples and discards."""

from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from ..corpus.document import Document
from ..kbmodel import Query

Chain = Tuple[str, ...]


@dataclass(frozen=True)
class TraversalResult:
    """
    Outcome of a traversal from one query subject.

    Attributes:
        paths: Reached endpoint -> simple document chains reaching it
    """

    paths: Mapping[str, FrozenSet[Chain]] = field(default_factory=dict)

    @property
    def reached_endpoints(self) -> FrozenSet[str]:
        return frozenset(e for e, chains in self.paths.items() if chains)

    @property
    def visited_docs(self) -> FrozenSet[str]:
        """Documents lying on at least one chain."""
        docs = set()
        for chains in self.paths.values():
            for chain in chains:
                docs.update(chain)
        return frozenset(docs)

    def chains_for(self, endpoint: str) -> List[Chain]:
        """Chains of an endpoint, shortest first, then lexicographic."""
        return sorted(self.paths.get(endpoint, ()), key=lambda c: (len(c), c))

    def restricted(self, keep: Mapping[str, Sequence[Chain]]) -> "TraversalResult":
        return TraversalResult(paths={e: frozenset(c) for e, c in keep.items() if c})


class DiscardReason(str, Enum):
    """Why a (query, answer) pair produced no sample."""

    ANSWER_IN_SOURCE = "answer_in_source"
    SUBJECT_ABSENT = "subject_absent"
    ANSWER_UNREACHED = "answer_unreached"
    ANSWER_NOT_IN_POOL = "answer_not_in_pool"
    TOO_MANY_DOCS = "too_many_docs"
    TOO_MANY_CANDS = "too_many_cands"
    EMPTY_SUPPORT = "empty_support"


@dataclass(frozen=True)
class Discard:
    reason: DiscardReason
    detail: str = ""


class DiscardLedger(Counter):
    """Per-reason discard counts."""

    def record(self, discard: Discard) -> None:
        self[discard.reason.value] += 1

    @property
    def total(self) -> int:
        return sum(self.values())

    def to_dict(self) -> Dict[str, int]:
        return {reason: count for reason, count in sorted(self.items()) if count}


@dataclass(frozen=True)
class Sample:
    """
    One reading-comprehension sample.

    Attributes:
        id: Sample id
        query: Query whose ``subject`` is the subject's surface form as written
            to the dataset, not the KB entity id the induction query carried.
        answer: Answer surface form
        candidates: Candidate surface forms, answer included
        supports: Support documents (order carries no meaning)
        gold_paths: Document chains reaching the answer
        candidate_paths: Candidate -> number of chains reaching it
        mask_map: Candidate -> placeholder when the sample is masked
        mask_variants: Placeholder -> original text of each masked occurrence,
            present only when some occurrence differs from the candidate string
    """

    id: str
    query: Query
    answer: str
    candidates: Tuple[str, ...]
    supports: Tuple[Document, ...]
    gold_paths: Tuple[Chain, ...] = ()
    candidate_paths: Mapping[str, int] = field(default_factory=dict)
    mask_map: Optional[Mapping[str, str]] = None
    mask_variants: Optional[Mapping[str, Tuple[str, ...]]] = None

    @property
    def masked(self) -> bool:
        return self.mask_map is not None

    @property
    def relation(self) -> str:
        return self.query.relation

    @property
    def support_ids(self) -> Tuple[str, ...]:
        return tuple(doc.doc_id for doc in self.supports)

    def with_supports(self, supports: Sequence[Document], **changes) -> "Sample":
        return replace(self, supports=tuple(supports), **changes)

    def to_dict(self) -> dict:
        """JSON object form (one dataset line)."""
        record = {
            "id": self.id,
            "query": {"subject": self.query.subject, "relation": self.query.relation},
            "answer": self.answer,
            "candidates": list(self.candidates),
            "supports": [doc.to_support() for doc in self.supports],
            "gold_paths": [list(chain) for chain in self.gold_paths],
            "candidate_paths": dict(self.candidate_paths),
        }
        if self.mask_map is not None:
            record["masked"] = True
            record["mask_map"] = dict(self.mask_map)
            if self.mask_variants:
                record["mask_variants"] = {p: list(v) for p, v in self.mask_variants.items()}
        return record

    @classmethod
    def from_dict(cls, record: Mapping) -> "Sample":
        """
        Inverse of to_dict. Schema checks live in hop_toolkit.io.

        Raises:
            KeyError, TypeError, ValueError: On malformed records
        """
        query = record["query"]
        mask_map = record.get("mask_map")
        variants = record.get("mask_variants")
        return cls(
            id=record["id"],
            query=Query(subject=query["subject"], relation=query["relation"]),
            answer=record["answer"],
            candidates=tuple(record["candidates"]),
            supports=tuple(Document.from_support(s) for s in record["supports"]),
            gold_paths=tuple(tuple(chain) for chain in record["gold_paths"]),
            candidate_paths={c: int(n) for c, n in record["candidate_paths"].items()},
            mask_map=dict(mask_map) if mask_map is not None else None,
            mask_variants={p: tuple(v) for p, v in variants.items()} if variants else None,
        )
