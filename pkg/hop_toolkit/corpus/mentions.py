"""Lexicon-based mention annotation."""

import logging
from typing import Iterable, List, Mapping, Optional, Union

from ..exceptions import ConfigError
from ..kbmodel import KnowledgeBase
from ..utils.text import PhraseMatcher
from .document import Document, Mention, tokenize

logger = logging.getLogger(__name__)


class Lexicon:
    """
    Name variant -> entity id table, pre-tokenized for matching.

    A variant that is already registered keeps its first entity; later
    claims on the same variant are logged and ignored.
    """

    def __init__(self, case_sensitive: bool = False):
        self.case_sensitive = case_sensitive
        self._matcher: PhraseMatcher[str] = PhraseMatcher(case_sensitive=case_sensitive)
        self.collisions = 0

    def add(self, variant: str, entity: str) -> bool:
        """
        Register a name variant.

        Raises:
            ConfigError: If the variant tokenizes to nothing
        """
        tokens = tokenize(variant)
        if not tokens:
            raise ConfigError(f"Name variant {variant!r} of entity '{entity}' has no tokens")
        added = self._matcher.add(tokens, entity)
        if not added and self._matcher.get(tokens) != entity:
            self.collisions += 1
            logger.debug("Variant %r already bound to %s; ignoring for %s",
                         variant, self._matcher.get(tokens), entity)
        return added

    def __len__(self) -> int:
        return len(self._matcher)

    def lookup(self, variant: str) -> Optional[str]:
        return self._matcher.get(tokenize(variant))

    @property
    def matcher(self) -> PhraseMatcher[str]:
        return self._matcher

    @classmethod
    def from_mapping(cls, variants: Mapping[str, str], case_sensitive: bool = False) -> "Lexicon":
        lexicon = cls(case_sensitive=case_sensitive)
        for variant, entity in variants.items():
            lexicon.add(variant, entity)
        return lexicon

    @classmethod
    def from_kb(
        cls,
        kb: KnowledgeBase,
        case_sensitive: bool = False,
        entities: Optional[Iterable[str]] = None,
    ) -> "Lexicon":
        """
        Build a lexicon from the KB's name variants.

        Args:
            kb: Knowledge base
            case_sensitive: Match case exactly
            entities: Restrict to these entity ids (default: all, in KB order)
        """
        lexicon = cls(case_sensitive=case_sensitive)
        wanted = None if entities is None else set(entities)
        for entity, names in kb.entities.items():
            if wanted is not None and entity not in wanted:
                continue
            for name in names:
                lexicon.add(name, entity)
        if lexicon.collisions:
            logger.info("Lexicon: %d variants shared by several entities", lexicon.collisions)
        return lexicon


def annotate_mentions(
    doc: Document,
    lexicon: Union[Lexicon, Mapping[str, str]],
) -> List[Mention]:
    """
    Find entity mentions in a document body.

    Exact token-sequence matches of name variants; overlapping matches
    resolve longest first, then leftmost.

    Args:
        doc: Document to annotate
        lexicon: Lexicon or plain variant -> entity mapping (case-insensitive)

    Returns:
        Non-overlapping mentions sorted by start

    Raises:
        ConfigError: If a variant tokenizes to an empty sequence
    """
    if not isinstance(lexicon, Lexicon):
        lexicon = Lexicon.from_mapping(lexicon)
    return [
        Mention(start=m.start, length=m.length, entity=m.label)
        for m in lexicon.matcher.find(doc.body)
    ]
