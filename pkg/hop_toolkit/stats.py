"""
Dataset statistics and distribution exports.

Summaries report min, max, mean and median; the median of an even
number of values is the lower of the two middle values.
"""

from collections import Counter
from dataclasses import asdict, dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from .exceptions import DatasetFormatError
from .induce.sample import Sample

METRICS = ("candidates", "documents", "tokens")


@dataclass(frozen=True)
class Summary:
    min: float
    max: float
    mean: float
    median: float

    @classmethod
    def of(cls, values: Iterable[float]) -> "Summary":
        arr = np.sort(np.asarray(list(values), dtype=float))
        if arr.size == 0:
            raise DatasetFormatError("Cannot summarize an empty sequence")
        return cls(
            min=float(arr[0]),
            max=float(arr[-1]),
            mean=float(arr.mean()),
            median=float(arr[(arr.size - 1) // 2]),
        )


@dataclass(frozen=True)
class SplitStats:
    n_samples: int
    candidates: Summary
    documents: Summary
    tokens_per_document: Summary
    n_query_types: int
    paths_per_sample: Summary
    gold_chain_length: Dict[int, int]

    def to_dict(self) -> dict:
        data = asdict(self)
        data["gold_chain_length"] = {str(k): v for k, v in sorted(self.gold_chain_length.items())}
        return data


def sample_values(samples: Sequence[Sample], metric: str) -> List[int]:
    """
    One value per sample: number of candidates, documents or support tokens.

    Raises:
        ValueError: For unknown metrics
    """
    if metric == "candidates":
        return [len(s.candidates) for s in samples]
    if metric == "documents":
        return [len(s.supports) for s in samples]
    if metric == "tokens":
        return [sum(len(d.tokens) for d in s.supports) for s in samples]
    raise ValueError(f"Unknown metric '{metric}'. Available: {', '.join(METRICS)}")


def split_stats(samples: Sequence[Sample]) -> SplitStats:
    """
    Statistics of one split.

    Token counts cover title and body of each distinct support document.
    Paths per sample count the chains over all candidates; the gold chain
    length distribution uses each sample's shortest gold chain.

    Raises:
        DatasetFormatError: If the split is empty
    """
    if not samples:
        raise DatasetFormatError("Cannot compute statistics of an empty split")

    doc_lengths: Dict[str, int] = {}
    for sample in samples:
        for doc in sample.supports:
            doc_lengths.setdefault(doc.doc_id, len(doc.tokens))

    gold_lengths = Counter(
        min(len(chain) for chain in s.gold_paths) for s in samples if s.gold_paths
    )
    return SplitStats(
        n_samples=len(samples),
        candidates=Summary.of(sample_values(samples, "candidates")),
        documents=Summary.of(sample_values(samples, "documents")),
        tokens_per_document=Summary.of(doc_lengths.values()),
        n_query_types=len({s.relation for s in samples}),
        paths_per_sample=Summary.of(sum(s.candidate_paths.values()) for s in samples),
        gold_chain_length=dict(gold_lengths),
    )


def query_type_distribution(samples: Sequence[Sample]) -> List[Tuple[str, float]]:
    """Share of each relation, largest first, ties by relation name."""
    counts = Counter(s.relation for s in samples)
    total = sum(counts.values())
    if not total:
        return []
    return sorted(((r, n / total) for r, n in counts.items()), key=lambda rf: (-rf[1], rf[0]))


def query_type_coverage(
    samples: Sequence[Sample],
    ks: Sequence[int] = (25, 50, 100, 200),
) -> Dict[int, float]:
    """Cumulative share of samples covered by the k most frequent relations."""
    shares = np.array([f for _, f in query_type_distribution(samples)], dtype=float)
    cumulative = np.cumsum(shares) if shares.size else shares
    coverage = {}
    for k in ks:
        if not cumulative.size:
            coverage[k] = 0.0
        else:
            coverage[k] = float(min(1.0, cumulative[min(k, cumulative.size) - 1]))
    return coverage


def histogram(values: Sequence[int], bin_width: int = 1) -> List[Tuple[int, int, int]]:
    """
    Fixed-width histogram starting at 0.

    Returns:
        (bin_start, bin_end, count) rows with bin_end exclusive; counts
        sum to len(values)

    Raises:
        ValueError: If bin_width < 1 or a value is negative
    """
    if bin_width < 1:
        raise ValueError(f"bin_width must be positive, got {bin_width}")
    arr = np.asarray(values, dtype=np.int64)
    if arr.size == 0:
        return []
    if arr.min() < 0:
        raise ValueError("histogram values must be non-negative")
    counts = np.bincount(arr // bin_width)
    return [
        (i * bin_width, (i + 1) * bin_width, int(c))
        for i, c in enumerate(counts)
    ]
