"""Document truncation policies."""

from dataclasses import replace
from typing import Optional

from ..config.policies import TruncationPolicy
from .document import Document, source_prefix


def truncate_document(
    doc: Document,
    policy: TruncationPolicy,
    max_tokens: int = 300,
    keep_title: bool = True,
) -> Optional[Document]:
    """
    Cut a document down to the part the pipeline keeps.

    FIRST_PARAGRAPH keeps the body up to the first blank-line boundary.
    MAX_TOKENS keeps the first ``max_tokens`` body tokens (and the title
    only when ``keep_title``). Mentions reaching past the cut are dropped.

    Returns:
        The truncated document, or None when no body token survives
    """
    if policy is TruncationPolicy.FIRST_PARAGRAPH:
        cut = doc.paragraph_starts[0] if doc.paragraph_starts else len(doc.body)
        title = doc.title
    elif policy is TruncationPolicy.MAX_TOKENS:
        cut = min(max_tokens, len(doc.body))
        title = doc.title if keep_title else ()
    else:
        cut = len(doc.body)
        title = doc.title

    if cut < 1:
        return None
    if cut == len(doc.body) and title == doc.title:
        return doc

    mentions = None
    if doc.mentions is not None:
        mentions = tuple(m for m in doc.mentions if m.end <= cut)
    return replace(
        doc,
        title=title,
        body=doc.body[:cut],
        mentions=mentions,
        paragraph_starts=tuple(p for p in doc.paragraph_starts if p < cut),
        source_title=doc.source_title if title else source_prefix(doc.source_title, 0),
        source_text=source_prefix(doc.source_text, cut),
    )
