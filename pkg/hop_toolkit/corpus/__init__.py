"""Documents, tokenization, mention annotation and truncation."""

from .document import Document, Mention, detokenize, source_prefix, token_spans, tokenize
from .loader import (
    Corpus,
    corpus_to_records,
    document_from_record,
    load_corpus,
    prepare_corpus,
    save_corpus,
)
from .mentions import Lexicon, annotate_mentions
from .truncation import truncate_document

__all__ = [
    "Corpus",
    "Document",
    "Lexicon",
    "Mention",
    "annotate_mentions",
    "corpus_to_records",
    "detokenize",
    "document_from_record",
    "load_corpus",
    "prepare_corpus",
    "save_corpus",
    "source_prefix",
    "token_spans",
    "tokenize",
    "truncate_document",
]
