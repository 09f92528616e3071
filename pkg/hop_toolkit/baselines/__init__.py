"""Non-neural baseline predictors."""

import importlib

from .base import Baseline, Prediction, mention_counts
from .chance import MaxMentionBaseline, RandomBaseline, predict_max_mention, predict_random
from .cue import DocumentCueBaseline, predict_document_cue
from .majority import MajorityBaseline, answer_priors, predict_majority
from .tfidf import TfIdfBaseline, TfIdfIndex, predict_tfidf, query_terms, tfidf_score

__all__ = [
    "BASELINE_NAMES",
    "Baseline",
    "DocumentCueBaseline",
    "MajorityBaseline",
    "MaxMentionBaseline",
    "Prediction",
    "RandomBaseline",
    "TfIdfBaseline",
    "TfIdfIndex",
    "answer_priors",
    "get_baseline",
    "mention_counts",
    "predict_document_cue",
    "predict_majority",
    "predict_max_mention",
    "predict_random",
    "predict_tfidf",
    "query_terms",
    "tfidf_score",
]

_BASELINE_MODULES = {
    "random": ("chance", "RandomBaseline"),
    "maxmention": ("chance", "MaxMentionBaseline"),
    "majority": ("majority", "MajorityBaseline"),
    "tfidf": ("tfidf", "TfIdfBaseline"),
    "cue": ("cue", "DocumentCueBaseline"),
}

BASELINE_NAMES = tuple(_BASELINE_MODULES)


def get_baseline(name: str, **kwargs) -> Baseline:
    """Get a baseline by name."""
    if name not in _BASELINE_MODULES:
        raise ValueError(f"Unknown baseline '{name}'. Available: {', '.join(_BASELINE_MODULES.keys())}")
    module_name, class_name = _BASELINE_MODULES[name]
    module = importlib.import_module(f".{module_name}", package=__name__)
    cls = getattr(module, class_name)
    return cls(**kwargs)
