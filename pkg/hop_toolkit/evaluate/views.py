"""Ablation views of a dataset."""

from typing import Iterable, List

from ..baselines.base import mention_counts
from ..exceptions import DatasetFormatError
from ..induce.sample import Sample

FULL = "full"
GOLD_CHAIN = "gold-chain"
CANDIDATE_DOCS_ONLY = "candidate-docs-only"
VIEWS = (FULL, GOLD_CHAIN, CANDIDATE_DOCS_ONLY)


def gold_chain_view(sample: Sample) -> Sample:
    """
    Keep only the documents on chains to the answer.

    Candidates no longer mentioned in the remaining documents are dropped;
    the answer always stays.

    Raises:
        DatasetFormatError: If the sample has no gold chain
    """
    if not sample.gold_paths:
        raise DatasetFormatError(f"Sample {sample.id} has no gold chain")
    on_chain = {doc_id for chain in sample.gold_paths for doc_id in chain}
    reduced = sample.with_supports([d for d in sample.supports if d.doc_id in on_chain])

    counts = mention_counts(reduced)
    candidates = tuple(c for c in sample.candidates if c == sample.answer or counts[c] > 0)
    return reduced.with_supports(
        reduced.supports,
        candidates=candidates,
        candidate_paths={c: n for c, n in sample.candidate_paths.items() if c in candidates},
    )


def candidate_docs_only_view(sample: Sample) -> Sample:
    """
    Drop supports that mention no candidate.

    Candidates are unchanged; the result may have no supports left.
    """
    kept = []
    for doc in sample.supports:
        single = sample.with_supports([doc])
        if any(mention_counts(single).values()):
            kept.append(doc)
    return sample.with_supports(kept)


def apply_view(samples: Iterable[Sample], view: str) -> List[Sample]:
    """
    Apply a named view to every sample.

    Samples left without supports are dropped.

    Raises:
        ValueError: For unknown view names
    """
    if view == FULL:
        return list(samples)
    if view == GOLD_CHAIN:
        return [gold_chain_view(s) for s in samples]
    if view == CANDIDATE_DOCS_ONLY:
        return [v for v in map(candidate_docs_only_view, samples) if v.supports]
    raise ValueError(f"Unknown view '{view}'. Available: {', '.join(VIEWS)}")
