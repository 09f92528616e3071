"""Bias mitigation: cooccurrence filtering, answer capping, blocklists and masking."""

from .cooccurrence import CooccurrenceTable, build_cooccurrence, filter_by_cooccurrence
from .masking import (
    PLACEHOLDER_PATTERN,
    MaskMap,
    mask_sample,
    placeholder_pool,
    unmask_prediction,
    unmask_sample,
)
from .subsample import apply_blocklist, cap_answer_frequency

__all__ = [
    "CooccurrenceTable",
    "MaskMap",
    "PLACEHOLDER_PATTERN",
    "apply_blocklist",
    "build_cooccurrence",
    "cap_answer_frequency",
    "filter_by_cooccurrence",
    "mask_sample",
    "placeholder_pool",
    "unmask_prediction",
    "unmask_sample",
]
