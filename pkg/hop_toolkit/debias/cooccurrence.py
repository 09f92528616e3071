"""Document-answer cooccurrence statistic and the threshold filter."""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from ..induce.sample import Sample

logger = logging.getLogger(__name__)


@dataclass
class CooccurrenceTable:
    """
    Counts of (support document, correct answer) pairs.

    Attributes:
        counts: (doc_id, answer surface form) -> number of samples
        built_from: Split the counts come from
        n_samples: Number of samples counted
    """

    counts: Dict[Tuple[str, str], int] = field(default_factory=dict)
    built_from: str = "train"
    n_samples: int = 0

    def get(self, doc_id: str, candidate: str) -> int:
        return self.counts.get((doc_id, candidate), 0)

    def max_count(self, doc_ids: Iterable[str], candidate: str) -> int:
        """Largest count of ``candidate`` over the given documents (0 if none)."""
        return max((self.get(d, candidate) for d in doc_ids), default=0)

    def __len__(self) -> int:
        return len(self.counts)

    def to_records(self) -> List[dict]:
        """Rows sorted by descending count, then doc id and candidate."""
        rows = sorted(self.counts.items(), key=lambda kv: (-kv[1], kv[0]))
        return [
            {
                "doc_id": doc_id,
                "candidate": candidate,
                "count": count,
                "proportion": count / self.n_samples if self.n_samples else 0.0,
            }
            for (doc_id, candidate), count in rows
        ]

    @classmethod
    def from_records(
        cls,
        records: Iterable[Mapping],
        built_from: str = "train",
        n_samples: int = 0,
    ) -> "CooccurrenceTable":
        counts = {(r["doc_id"], r["candidate"]): int(r["count"]) for r in records}
        return cls(counts=counts, built_from=built_from, n_samples=n_samples)


def build_cooccurrence(samples: Sequence[Sample], built_from: str = "train") -> CooccurrenceTable:
    """Count, over all samples, each support document together with the sample's answer."""
    counts: Counter = Counter()
    for sample in samples:
        for doc_id in set(sample.support_ids):
            counts[(doc_id, sample.answer)] += 1
    logger.info("Cooccurrence table from %d %s samples: %d pairs",
                len(samples), built_from, len(counts))
    return CooccurrenceTable(counts=dict(counts), built_from=built_from, n_samples=len(samples))


def filter_by_cooccurrence(
    samples: Sequence[Sample],
    table: CooccurrenceTable,
    threshold: int = 20,
) -> List[Sample]:
    """
    Drop samples pairing a support document with a candidate seen together too often.

    A sample goes when some (support, candidate) pair has a table count
    above ``threshold``. The table is not updated while filtering.
    """
    kept = []
    for sample in samples:
        doc_ids = set(sample.support_ids)
        if any(table.max_count(doc_ids, c) > threshold for c in sample.candidates):
            continue
        kept.append(sample)
    logger.info("Cooccurrence filter (>%d): kept %d of %d samples",
                threshold, len(kept), len(samples))
    return kept
