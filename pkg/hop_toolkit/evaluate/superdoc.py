"""Superdocument export for span-prediction readers."""

from dataclasses import dataclass
from typing import List, Tuple

from ..corpus.document import tokenize
from ..exceptions import ExportError
from ..induce.sample import Sample
from ..utils.seeding import sample_rng

SEPARATOR = "@@SEP@@"
SPAN_MODES = ("first", "random")


@dataclass(frozen=True)
class SuperDocument:
    """
    All supports of a sample concatenated into one token sequence.

    Attributes:
        tokens: Document tokens with SEPARATOR between documents
        span: Gold answer span [start, end), end exclusive
        separators: Positions of the separator tokens
    """

    sample_id: str
    tokens: Tuple[str, ...]
    span: Tuple[int, int]
    separators: Tuple[int, ...]
    candidates: Tuple[str, ...]
    answer: str

    def to_dict(self) -> dict:
        return {
            "id": self.sample_id,
            "tokens": list(self.tokens),
            "span": list(self.span),
            "candidates": list(self.candidates),
            "answer": self.answer,
        }


def _occurrences(tokens: Tuple[str, ...], needle: List[str]) -> List[int]:
    hay = [t.lower() for t in tokens]
    target = [t.lower() for t in needle]
    n = len(target)
    return [i for i in range(len(hay) - n + 1) if hay[i:i + n] == target]


def superdocument_export(sample: Sample, seed: int = 0, span: str = "first") -> SuperDocument:
    """
    Concatenate a sample's supports in seeded random order.

    Each document contributes its title and body tokens. The gold span is
    the first answer occurrence (``span="first"``) or a seeded uniformly
    chosen one (``span="random"``), matched case-insensitively.

    Raises:
        ExportError: If the answer occurs in no support, a support contains
            the separator token, or the span mode is unknown
    """
    if span not in SPAN_MODES:
        raise ExportError(f"Unknown span mode '{span}'. Available: {', '.join(SPAN_MODES)}")
    rng = sample_rng(seed, f"superdoc:{sample.id}")
    order = rng.permutation(len(sample.supports))

    tokens: List[str] = []
    separators: List[int] = []
    for position, index in enumerate(order):
        doc = sample.supports[int(index)]
        if SEPARATOR in doc.tokens:
            raise ExportError(f"Support {doc.doc_id} of {sample.id} contains the separator token")
        if position:
            separators.append(len(tokens))
            tokens.append(SEPARATOR)
        tokens.extend(doc.tokens)

    answer_tokens = tokenize(sample.answer)
    starts = _occurrences(tuple(tokens), answer_tokens) if answer_tokens else []
    if not starts:
        raise ExportError(f"Answer of sample {sample.id} is not mentioned in any support")
    if span == "first":
        start = starts[0]
    else:
        start = starts[int(rng.integers(len(starts)))]

    return SuperDocument(
        sample_id=sample.id,
        tokens=tuple(tokens),
        span=(start, start + len(answer_tokens)),
        separators=tuple(separators),
        candidates=sample.candidates,
        answer=sample.answer,
    )
