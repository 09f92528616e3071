"""Answer normalization and exact-match scoring."""

import logging
import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import AbstractSet, Dict, Iterable, Mapping, Optional, Sequence, Union

from ..baselines.base import Prediction
from ..exceptions import ScoringError
from ..induce.sample import Sample
from ..utils.text import is_punctuation

logger = logging.getLogger(__name__)

_ARTICLES = re.compile(r"\b(a|an|the)\b", re.UNICODE)


def normalize_answer(text: str) -> str:
    """
    Normalize an answer string for exact-match comparison.

    Lowercases, deletes Unicode punctuation (categories P*), drops the
    articles a/an/the as whole words and collapses whitespace.
    """
    text = text.lower()
    text = "".join(ch for ch in text if not is_punctuation(ch))
    text = _ARTICLES.sub(" ", text)
    return " ".join(text.split())


@dataclass
class EvalReport:
    """Exact-match accuracy overall and per relation."""

    accuracy: float
    n_scored: int
    n_correct: int
    n_missing: int = 0
    per_relation: Dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "n_scored": self.n_scored,
            "n_correct": self.n_correct,
            "n_missing": self.n_missing,
            "per_relation": dict(sorted(self.per_relation.items())),
        }


PredictionLike = Union[Prediction, Mapping[str, str]]


def _as_pairs(preds: Iterable[PredictionLike]) -> Dict[str, str]:
    by_id: Dict[str, str] = {}
    for pred in preds:
        if isinstance(pred, Prediction):
            sample_id, predicted = pred.sample_id, pred.predicted
        else:
            sample_id, predicted = pred["id"], pred["predicted"]
        if sample_id in by_id:
            raise ScoringError(f"Duplicate prediction for sample '{sample_id}'")
        by_id[sample_id] = predicted
    return by_id


def exact_match_accuracy(
    preds: Iterable[PredictionLike],
    gold: Sequence[Sample],
    subset: Optional[AbstractSet[str]] = None,
) -> EvalReport:
    """
    Score predictions against gold answers.

    A sample without a prediction counts as wrong.

    Args:
        preds: Predictions (objects or {"id", "predicted"} records)
        gold: Gold samples
        subset: Score only these sample ids

    Raises:
        ScoringError: On duplicate prediction ids
    """
    by_id = _as_pairs(preds)
    if subset is not None:
        gold = [s for s in gold if s.id in subset]

    correct = 0
    missing = 0
    per_total: Dict[str, int] = defaultdict(int)
    per_correct: Dict[str, int] = defaultdict(int)
    for sample in gold:
        per_total[sample.relation] += 1
        predicted = by_id.get(sample.id)
        if predicted is None:
            missing += 1
            continue
        if normalize_answer(predicted) == normalize_answer(sample.answer):
            correct += 1
            per_correct[sample.relation] += 1

    gold_ids = {s.id for s in gold}
    extra = sum(1 for i in by_id if i not in gold_ids)
    if extra and subset is None:
        logger.warning("%d predictions have no gold sample", extra)
    if missing:
        logger.warning("%d gold samples have no prediction", missing)

    n = len(gold)
    return EvalReport(
        accuracy=correct / n if n else 0.0,
        n_scored=n,
        n_correct=correct,
        n_missing=missing,
        per_relation={r: per_correct[r] / t for r, t in per_total.items()},
    )
