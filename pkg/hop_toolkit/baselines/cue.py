"""Document-cue baseline: answer with the candidate seen most often next to a support."""

from typing import Optional, Sequence

from ..debias.cooccurrence import CooccurrenceTable, build_cooccurrence
from ..induce.sample import Sample
from .base import Baseline, Prediction, argmax_lexicographic, require_candidates


def predict_document_cue(table: CooccurrenceTable, sample: Sample) -> Prediction:
    """
    argmax over candidates c of max over supports d of cooccurrence(d, c).

    Missing pairs count 0; ties go to the lexicographically first candidate.
    """
    require_candidates(sample)
    doc_ids = set(sample.support_ids)
    scores = {c: table.max_count(doc_ids, c) for c in sample.candidates}
    choice = argmax_lexicographic(scores)
    return Prediction(sample.id, choice, float(scores[choice]))


class DocumentCueBaseline(Baseline):
    needs_training = True

    def __init__(self, table: Optional[CooccurrenceTable] = None):
        self.table = table or CooccurrenceTable()

    def fit(self, train: Sequence[Sample]) -> "DocumentCueBaseline":
        self.table = build_cooccurrence(train)
        return self

    def predict(self, sample: Sample) -> Prediction:
        return predict_document_cue(self.table, sample)

    def get_name(self) -> str:
        return "cue"
