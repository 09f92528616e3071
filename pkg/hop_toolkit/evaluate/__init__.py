"""Exact-match scoring, ablation views and superdocument export."""

from .scoring import EvalReport, exact_match_accuracy, normalize_answer
from .superdoc import SEPARATOR, SuperDocument, superdocument_export
from .views import (
    CANDIDATE_DOCS_ONLY,
    FULL,
    GOLD_CHAIN,
    VIEWS,
    apply_view,
    candidate_docs_only_view,
    gold_chain_view,
)

__all__ = [
    "CANDIDATE_DOCS_ONLY",
    "EvalReport",
    "FULL",
    "GOLD_CHAIN",
    "SEPARATOR",
    "SuperDocument",
    "VIEWS",
    "apply_view",
    "candidate_docs_only_view",
    "exact_match_accuracy",
    "gold_chain_view",
    "normalize_answer",
    "superdocument_export",
]
