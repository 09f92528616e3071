"""TF-IDF retrieval baseline over a sample's own supports."""

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Union

from ..corpus.document import Document, tokenize
from ..induce.sample import Sample
from .base import Baseline, Prediction, argmax_lexicographic, require_candidates


@dataclass
class TfIdfIndex:
    """
    Term statistics over a small document collection.

    Terms are lowercased title and body tokens. Scores use raw term
    frequency and idf(t) = 1 + ln(N / (1 + df(t))).
    """

    tf: Dict[str, Counter] = field(default_factory=dict)
    df: Counter = field(default_factory=Counter)

    @property
    def n_docs(self) -> int:
        return len(self.tf)

    @classmethod
    def from_documents(cls, documents: Iterable[Document]) -> "TfIdfIndex":
        index = cls()
        for doc in documents:
            if doc.doc_id in index.tf:
                continue
            counts = Counter(t.lower() for t in doc.tokens)
            index.tf[doc.doc_id] = counts
            index.df.update(counts.keys())
        return index

    def idf(self, term: str) -> float:
        return 1.0 + math.log(self.n_docs / (1 + self.df.get(term, 0)))


def query_terms(sample: Sample, candidate: str) -> List[str]:
    """Distinct lowercased terms of subject, relation (split on underscores) and candidate."""
    tokens = (
        tokenize(sample.query.subject)
        + tokenize(sample.query.relation.replace("_", " "))
        + tokenize(candidate)
    )
    return sorted({t.lower() for t in tokens})


def tfidf_score(
    index: TfIdfIndex,
    query_tokens: Sequence[str],
    doc: Union[str, Document],
) -> float:
    """
    OR-query score of one document.

    Sum over distinct query terms present in the document of tf * idf;
    absent terms contribute nothing.
    """
    doc_id = doc.doc_id if isinstance(doc, Document) else doc
    counts = index.tf.get(doc_id, Counter())
    score = 0.0
    for term in sorted({t.lower() for t in query_tokens}):
        tf = counts.get(term, 0)
        if tf:
            score += tf * index.idf(term)
    return score


def predict_tfidf(sample: Sample, index: Optional[TfIdfIndex] = None) -> Prediction:
    """
    Candidate whose query (subject + relation + candidate) best matches a single support.

    Ties go to the lexicographically first candidate.
    """
    require_candidates(sample)
    if index is None:
        index = TfIdfIndex.from_documents(sample.supports)
    scores = {
        c: max((tfidf_score(index, query_terms(sample, c), d) for d in index.tf), default=0.0)
        for c in sample.candidates
    }
    choice = argmax_lexicographic(scores)
    return Prediction(sample.id, choice, scores[choice])


class TfIdfBaseline(Baseline):
    def predict(self, sample: Sample) -> Prediction:
        return predict_tfidf(sample)

    def get_name(self) -> str:
        return "tfidf"
