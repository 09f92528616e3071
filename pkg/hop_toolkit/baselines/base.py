"""Abstract base class for baseline predictors."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from ..corpus.document import tokenize
from ..exceptions import ScoringError
from ..induce.sample import Sample
from ..utils.text import PhraseMatcher


@dataclass(frozen=True)
class Prediction:
    """A predicted candidate for one sample."""

    sample_id: str
    predicted: str
    score: Optional[float] = None

    def to_dict(self) -> dict:
        record = {"id": self.sample_id, "predicted": self.predicted}
        if self.score is not None:
            record["score"] = self.score
        return record


def require_candidates(sample: Sample) -> None:
    if not sample.candidates:
        raise ScoringError(f"Sample {sample.id} has no candidates")


def argmax_lexicographic(scores: Mapping[str, float]) -> str:
    """Highest-scoring key; ties go to the lexicographically smallest key."""
    return min(scores, key=lambda c: (-scores[c], c))


def mention_counts(sample: Sample) -> Dict[str, int]:
    """
    Mentions of each candidate across all supports.

    Candidates are matched together, case-insensitively and longest
    first, over titles and bodies.
    """
    matcher: PhraseMatcher[str] = PhraseMatcher(case_sensitive=False)
    for candidate in sample.candidates:
        tokens = tokenize(candidate)
        if tokens:
            matcher.add(tokens, candidate)
    counts = {c: 0 for c in sample.candidates}
    for doc in sample.supports:
        for candidate, n in matcher.count(doc.tokens).items():
            counts[candidate] += n
    return counts


class Baseline(ABC):
    """Abstract base class for baseline predictors."""

    #: True for models that need training-split statistics
    needs_training = False

    def fit(self, train: Sequence[Sample]) -> "Baseline":
        """Collect training statistics (no-op for unsupervised models)."""
        return self

    @abstractmethod
    def predict(self, sample: Sample) -> Prediction:
        """
        Pick one of the sample's candidates.

        Raises:
            ScoringError: If the sample has no candidates
        """
        pass

    @abstractmethod
    def get_name(self) -> str:
        """Return the model name used on the command line."""
        pass

    def predict_all(self, samples: Iterable[Sample]) -> List[Prediction]:
        return [self.predict(sample) for sample in samples]
