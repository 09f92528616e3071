"""Random and max-mention baselines."""

from ..induce.sample import Sample
from ..utils.seeding import sample_rng
from .base import Baseline, Prediction, mention_counts, require_candidates


def predict_random(sample: Sample, seed: int = 0) -> Prediction:
    """Uniform seeded choice over the candidates."""
    require_candidates(sample)
    rng = sample_rng(seed, f"random:{sample.id}")
    index = int(rng.integers(len(sample.candidates)))
    return Prediction(sample.id, sample.candidates[index])


def predict_max_mention(sample: Sample, seed: int = 0) -> Prediction:
    """Most frequently mentioned candidate; ties broken by a seeded choice."""
    require_candidates(sample)
    counts = mention_counts(sample)
    best = max(counts.values())
    tied = sorted(c for c, n in counts.items() if n == best)
    if len(tied) == 1:
        choice = tied[0]
    else:
        rng = sample_rng(seed, f"max-mention:{sample.id}")
        choice = tied[int(rng.integers(len(tied)))]
    return Prediction(sample.id, choice, float(best))


class RandomBaseline(Baseline):
    def __init__(self, seed: int = 0):
        self.seed = seed

    def predict(self, sample: Sample) -> Prediction:
        return predict_random(sample, self.seed)

    def get_name(self) -> str:
        return "random"


class MaxMentionBaseline(Baseline):
    def __init__(self, seed: int = 0):
        self.seed = seed

    def predict(self, sample: Sample) -> Prediction:
        return predict_max_mention(sample, self.seed)

    def get_name(self) -> str:
        return "maxmention"
