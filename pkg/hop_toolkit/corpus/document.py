"""Documents, mentions and the pipeline tokenizer."""

import re
from dataclasses import dataclass, replace
from typing import FrozenSet, List, Optional, Sequence, Tuple

from ..utils.text import is_punctuation

_PARAGRAPH_BREAK = re.compile(r"\n[ \t\r\f\v]*\n")
_CHUNK = re.compile(r"\S+")

Span = Tuple[int, int]


def token_spans(text: str) -> List[Span]:
    """
    Character spans of the tokens ``tokenize(text)`` returns, in order.

    Splits on whitespace, then detaches every leading and trailing
    punctuation character of a chunk as a span of its own. Inner
    punctuation ("U.S", "don't") stays attached.
    """
    spans: List[Span] = []
    for chunk in _CHUNK.finditer(text):
        start, end = chunk.span()
        while start < end and is_punctuation(text[start]):
            spans.append((start, start + 1))
            start += 1
        stop = end
        while stop > start and is_punctuation(text[stop - 1]):
            stop -= 1
        if stop > start:
            spans.append((start, stop))
        spans.extend((i, i + 1) for i in range(stop, end))
    return spans


def tokenize(text: str) -> List[str]:
    """
    Split text into tokens.

    Example:
        >>> tokenize("Mumbai, India.")
        ['Mumbai', ',', 'India', '.']
    """
    return [text[start:end] for start, end in token_spans(text)]


def detokenize(tokens: Sequence[str]) -> str:
    """Join tokens with single spaces; tokenize() inverts this exactly."""
    return " ".join(tokens)


def source_prefix(text: Optional[str], n_tokens: int) -> Optional[str]:
    """Source text up to the end of its first ``n_tokens`` tokens."""
    if text is None:
        return None
    if n_tokens <= 0:
        return ""
    return text[:token_spans(text)[n_tokens - 1][1]]


@dataclass(frozen=True, order=True)
class Mention:
    """An entity mention: ``length`` body tokens starting at ``start``."""

    start: int
    length: int
    entity: str

    def __post_init__(self):
        if self.start < 0 or self.length < 1:
            raise ValueError(f"Invalid mention span start={self.start} length={self.length}")

    @property
    def end(self) -> int:
        return self.start + self.length

    def to_dict(self) -> dict:
        return {"entity": self.entity, "start": self.start, "length": self.length}


@dataclass(frozen=True)
class Document:
    """
    A titled token sequence.

    Documents read from text keep that text; ``title_text`` and ``text``
    return it unchanged, so writing a document back reproduces its input.
    Documents whose tokens were rebuilt without a source fall back to
    space-joined tokens.

    Attributes:
        doc_id: Unique document id
        title: Title tokens
        body: Body tokens
        canonical_entity: Entity this document is about, if any
        mentions: Body mentions; None until annotated
        paragraph_starts: Body token offsets where paragraphs after the first begin
        source_title: Title text the title tokens came from
        source_text: Body text the body tokens came from
    """

    doc_id: str
    title: Tuple[str, ...]
    body: Tuple[str, ...]
    canonical_entity: Optional[str] = None
    mentions: Optional[Tuple[Mention, ...]] = None
    paragraph_starts: Tuple[int, ...] = ()
    source_title: Optional[str] = None
    source_text: Optional[str] = None

    @classmethod
    def from_text(
        cls,
        doc_id: str,
        title: str,
        text: str,
        canonical_entity: Optional[str] = None,
        mentions: Optional[Sequence[Mention]] = None,
    ) -> "Document":
        """Tokenize raw title and text, recording blank-line paragraph boundaries."""
        spans = token_spans(text)
        starts: List[int] = []
        index = 0
        for paragraph_break in _PARAGRAPH_BREAK.finditer(text):
            while index < len(spans) and spans[index][0] < paragraph_break.end():
                index += 1
            if 0 < index < len(spans) and (not starts or starts[-1] != index):
                starts.append(index)
        return cls(
            doc_id=doc_id,
            title=tuple(tokenize(title)),
            body=tuple(text[start:end] for start, end in spans),
            canonical_entity=canonical_entity,
            mentions=tuple(sorted(mentions)) if mentions is not None else None,
            paragraph_starts=tuple(starts),
            source_title=title,
            source_text=text,
        )

    @property
    def title_text(self) -> str:
        if self.source_title is not None:
            return self.source_title
        return detokenize(self.title)

    @property
    def text(self) -> str:
        if self.source_text is not None:
            return self.source_text
        return detokenize(self.body)

    @property
    def tokens(self) -> Tuple[str, ...]:
        """Title followed by body."""
        return self.title + self.body

    @property
    def is_annotated(self) -> bool:
        return self.mentions is not None

    def mentioned_entities(self) -> FrozenSet[str]:
        """Entities with at least one mention (empty when not annotated)."""
        return frozenset(m.entity for m in self.mentions or ())

    def with_mentions(self, mentions: Sequence[Mention]) -> "Document":
        return replace(self, mentions=tuple(sorted(mentions)))

    def with_tokens(
        self,
        title: Sequence[str],
        body: Sequence[str],
        source_title: Optional[str] = None,
        source_text: Optional[str] = None,
    ) -> "Document":
        """
        Copy with new tokens and no annotation.

        A source string is kept only if it tokenizes to exactly the new tokens.
        """
        title, body = tuple(title), tuple(body)
        if source_title is not None and tuple(tokenize(source_title)) != title:
            source_title = None
        if source_text is not None and tuple(tokenize(source_text)) != body:
            source_text = None
        return Document(
            doc_id=self.doc_id,
            title=title,
            body=body,
            canonical_entity=self.canonical_entity,
            source_title=source_title,
            source_text=source_text,
        )

    def to_support(self) -> dict:
        """Record form used inside dataset samples."""
        return {"doc_id": self.doc_id, "title": self.title_text, "text": self.text}

    @classmethod
    def from_support(cls, record: dict) -> "Document":
        return cls.from_text(record["doc_id"], record["title"], record["text"])
