"""Corpus container, JSON Lines loading and preparation."""

import logging
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Union

from ..config.pipeline import PipelineConfig
from ..exceptions import DatasetFormatError
from ..kbmodel import KnowledgeBase
from ..utils.jsonio import read_jsonl, write_jsonl
from .document import Document, Mention
from .mentions import Lexicon, annotate_mentions
from .truncation import truncate_document

logger = logging.getLogger(__name__)


class Corpus:
    """Ordered, id-indexed collection of documents."""

    def __init__(self, documents: Iterable[Document] = ()):
        self._docs: Dict[str, Document] = {}
        for doc in documents:
            if doc.doc_id in self._docs:
                raise DatasetFormatError(f"duplicate doc_id '{doc.doc_id}'")
            self._docs[doc.doc_id] = doc
        self._canonical: Optional[Dict[str, List[Document]]] = None

    def __len__(self) -> int:
        return len(self._docs)

    def __iter__(self) -> Iterator[Document]:
        return iter(self._docs.values())

    def __contains__(self, doc_id: str) -> bool:
        return doc_id in self._docs

    def __getitem__(self, doc_id: str) -> Document:
        return self._docs[doc_id]

    def get(self, doc_id: str) -> Optional[Document]:
        return self._docs.get(doc_id)

    @property
    def doc_ids(self) -> List[str]:
        return list(self._docs)

    def canonical_documents(self, entity: str) -> List[Document]:
        """All documents claiming ``entity`` as their canonical entity."""
        if self._canonical is None:
            index: Dict[str, List[Document]] = {}
            for doc in self._docs.values():
                if doc.canonical_entity is not None:
                    index.setdefault(doc.canonical_entity, []).append(doc)
            self._canonical = index
        return self._canonical.get(entity, [])

    def canonical_document(self, entity: str) -> Optional[Document]:
        """The entity's canonical document, if it has one."""
        docs = self.canonical_documents(entity)
        return docs[0] if docs else None


def _parse_mentions(raw, n_tokens: int, path: str, line: int) -> List[Mention]:
    if not isinstance(raw, list):
        raise DatasetFormatError("must be a list", path=path, line=line, field="mentions")
    mentions = []
    for item in raw:
        try:
            mention = Mention(
                start=int(item["start"]),
                length=int(item["length"]),
                entity=str(item["entity"]),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise DatasetFormatError(
                f"malformed mention {item!r}", path=path, line=line, field="mentions"
            ) from e
        if mention.end > n_tokens:
            raise DatasetFormatError(
                f"mention {item!r} exceeds the {n_tokens}-token body",
                path=path, line=line, field="mentions",
            )
        mentions.append(mention)
    return mentions


def document_from_record(record, path: str = "<memory>", line: int = 0) -> Document:
    """
    Build a document from one corpus record.

    Raises:
        DatasetFormatError: If a required field is missing or mistyped
    """
    if not isinstance(record, dict):
        raise DatasetFormatError("record must be a JSON object", path=path, line=line)
    for name in ("doc_id", "title", "text"):
        if not isinstance(record.get(name), str):
            raise DatasetFormatError("missing or not a string", path=path, line=line, field=name)
    canonical = record.get("canonical_entity")
    if canonical is not None and not isinstance(canonical, str):
        raise DatasetFormatError("must be a string", path=path, line=line, field="canonical_entity")

    doc = Document.from_text(record["doc_id"], record["title"], record["text"], canonical)
    if "mentions" in record:
        doc = doc.with_mentions(_parse_mentions(record["mentions"], len(doc.body), path, line))
    return doc


def load_corpus(path: Union[str, Path]) -> Corpus:
    """
    Load a JSON Lines corpus.

    Raises:
        DatasetFormatError: On schema violations or duplicate ids
    """
    docs: List[Document] = []
    seen = set()
    for line_no, record in read_jsonl(path):
        doc = document_from_record(record, str(path), line_no)
        if doc.doc_id in seen:
            raise DatasetFormatError(
                f"duplicate doc_id '{doc.doc_id}'", path=str(path), line=line_no, field="doc_id"
            )
        seen.add(doc.doc_id)
        docs.append(doc)
    logger.info("Loaded %d documents from %s", len(docs), path)
    return Corpus(docs)


def corpus_to_records(corpus: Corpus) -> List[dict]:
    """Corpus records with mentions spelled out (inverse of load_corpus)."""
    records = []
    for doc in corpus:
        record = {"doc_id": doc.doc_id, "title": doc.title_text, "text": doc.text}
        if doc.canonical_entity is not None:
            record["canonical_entity"] = doc.canonical_entity
        if doc.mentions is not None:
            record["mentions"] = [m.to_dict() for m in doc.mentions]
        records.append(record)
    return records


def save_corpus(corpus: Corpus, path: Union[str, Path]) -> int:
    return write_jsonl(path, corpus_to_records(corpus))


def prepare_corpus(
    corpus: Corpus,
    kb: KnowledgeBase,
    config: PipelineConfig,
    lexicon: Optional[Lexicon] = None,
) -> Corpus:
    """
    Annotate and truncate every document.

    Documents with pre-supplied mentions keep them. Annotation runs on
    the full body and truncation then drops mentions past the cut.
    Documents left without body tokens are dropped.
    """
    if lexicon is None:
        lexicon = Lexicon.from_kb(kb, case_sensitive=config.case_sensitive)

    prepared: List[Document] = []
    dropped = 0
    for doc in corpus:
        if not doc.is_annotated:
            doc = doc.with_mentions(annotate_mentions(doc, lexicon))
        truncated = truncate_document(doc, config.truncation, config.max_tokens, config.keep_title)
        if truncated is None:
            dropped += 1
            logger.debug("Dropped empty document %s", doc.doc_id)
            continue
        prepared.append(truncated)

    if dropped:
        logger.warning("Dropped %d documents with empty body after truncation", dropped)
    logger.info("Prepared %d documents (policy=%s)", len(prepared), config.truncation.value)
    return Corpus(prepared)
