"""Traversal, sample assembly and split induction."""

from .assembly import answer_in_source, assemble_sample, balance_documents
from .pipeline import InductionResult, induce_split, sample_id
from .sample import Chain, Discard, DiscardLedger, DiscardReason, Sample, TraversalResult
from .traversal import traverse

__all__ = [
    "Chain",
    "Discard",
    "DiscardLedger",
    "DiscardReason",
    "InductionResult",
    "Sample",
    "TraversalResult",
    "answer_in_source",
    "assemble_sample",
    "balance_documents",
    "induce_split",
    "sample_id",
    "traverse",
]
