"""Token-level text utilities.

Phrase matching is shared by mention annotation, candidate masking,
mention counting and the ablation views, so every stage agrees on what
"a candidate is mentioned in a document" means.
"""

import unicodedata
from dataclasses import dataclass
from typing import Dict, Generic, Hashable, Iterable, List, Sequence, Tuple, TypeVar

Label = TypeVar("Label", bound=Hashable)


def is_punctuation(char: str) -> bool:
    """True for characters in the Unicode punctuation categories (P*)."""
    return unicodedata.category(char).startswith("P")


@dataclass(frozen=True)
class PhraseMatch(Generic[Label]):
    """A matched token span."""

    start: int
    length: int
    label: Label

    @property
    def end(self) -> int:
        """Exclusive end index."""
        return self.start + self.length


class PhraseMatcher(Generic[Label]):
    """
    Longest-match-first matcher for token phrases.

    Phrases are token tuples mapped to a label. Matching returns
    non-overlapping spans; when candidate spans overlap the longer one
    wins, and among equally long spans the leftmost one.
    """

    def __init__(self, case_sensitive: bool = False):
        self.case_sensitive = case_sensitive
        self._phrases: Dict[Tuple[str, ...], Label] = {}
        self._by_first: Dict[str, List[Tuple[str, ...]]] = {}

    def _key(self, tokens: Iterable[str]) -> Tuple[str, ...]:
        if self.case_sensitive:
            return tuple(tokens)
        return tuple(t.lower() for t in tokens)

    def add(self, tokens: Sequence[str], label: Label) -> bool:
        """
        Register a phrase.

        Args:
            tokens: Phrase tokens (non-empty)
            label: Value reported for matches of this phrase

        Returns:
            False if an equal phrase was already registered (first wins)

        Raises:
            ValueError: If tokens is empty
        """
        if not tokens:
            raise ValueError("Cannot register an empty phrase")
        key = self._key(tokens)
        if key in self._phrases:
            return False
        self._phrases[key] = label
        bucket = self._by_first.setdefault(key[0], [])
        bucket.append(key)
        bucket.sort(key=len, reverse=True)
        return True

    def __len__(self) -> int:
        return len(self._phrases)

    def __contains__(self, tokens: Sequence[str]) -> bool:
        return self._key(tokens) in self._phrases

    def get(self, tokens: Sequence[str]):
        """Label of a registered phrase, or None."""
        return self._phrases.get(self._key(tokens))

    def find(self, tokens: Sequence[str]) -> List[PhraseMatch]:
        """
        Find non-overlapping phrase occurrences.

        Returns:
            Matches sorted by start position
        """
        if not self._phrases or not tokens:
            return []
        keys = self._key(tokens)
        candidates: List[PhraseMatch] = []
        for start, first in enumerate(keys):
            for phrase in self._by_first.get(first, ()):
                end = start + len(phrase)
                if end <= len(keys) and keys[start:end] == phrase:
                    candidates.append(PhraseMatch(start, len(phrase), self._phrases[phrase]))

        candidates.sort(key=lambda m: (-m.length, m.start))
        taken = [False] * len(keys)
        accepted: List[PhraseMatch] = []
        for match in candidates:
            if any(taken[match.start:match.end]):
                continue
            for i in range(match.start, match.end):
                taken[i] = True
            accepted.append(match)

        accepted.sort(key=lambda m: m.start)
        return accepted

    def count(self, tokens: Sequence[str]) -> Dict[Label, int]:
        """Number of non-overlapping matches per label."""
        counts: Dict[Label, int] = {}
        for match in self.find(tokens):
            counts[match.label] = counts.get(match.label, 0) + 1
        return counts


def contains_sequence(
    haystack: Sequence[str],
    needle: Sequence[str],
    case_sensitive: bool = False,
) -> bool:
    """True if needle occurs as a contiguous token subsequence of haystack."""
    if not needle or len(needle) > len(haystack):
        return False
    if not case_sensitive:
        haystack = [t.lower() for t in haystack]
        needle = [t.lower() for t in needle]
    n = len(needle)
    first = needle[0]
    for i in range(len(haystack) - n + 1):
        if haystack[i] == first and list(haystack[i:i + n]) == list(needle):
            return True
    return False
