"""Majority-candidate-per-query-type baseline."""

from collections import Counter
from typing import Dict, Sequence, Union

from ..induce.sample import Sample
from .base import Baseline, Prediction, argmax_lexicographic, require_candidates

AnswerPriors = Dict[str, Counter]


def answer_priors(train: Sequence[Sample]) -> AnswerPriors:
    """Relation -> how often each answer was correct in training."""
    priors: AnswerPriors = {}
    for sample in train:
        priors.setdefault(sample.relation, Counter())[sample.answer] += 1
    return priors


def predict_majority(train: Union[Sequence[Sample], AnswerPriors], sample: Sample) -> Prediction:
    """
    Candidate most often correct for the sample's relation in training.

    Unseen candidates count 0; ties go to the lexicographically first.
    """
    require_candidates(sample)
    priors = train if isinstance(train, dict) else answer_priors(train)
    seen = priors.get(sample.relation, Counter())
    scores = {c: seen.get(c, 0) for c in sample.candidates}
    choice = argmax_lexicographic(scores)
    return Prediction(sample.id, choice, float(scores[choice]))


class MajorityBaseline(Baseline):
    needs_training = True

    def __init__(self):
        self.priors: AnswerPriors = {}

    def fit(self, train: Sequence[Sample]) -> "MajorityBaseline":
        self.priors = answer_priors(train)
        return self

    def predict(self, sample: Sample) -> Prediction:
        return predict_majority(self.priors, sample)

    def get_name(self) -> str:
        return "majority"
