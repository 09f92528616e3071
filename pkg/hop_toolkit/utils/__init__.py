"""Utility modules for hop_toolkit."""

from .jsonio import canonical_dumps, read_json, read_jsonl, write_json, write_jsonl
from .seeding import sample_rng, stable_hash
from .text import PhraseMatch, PhraseMatcher, contains_sequence, is_punctuation

__all__ = [
    "PhraseMatch",
    "PhraseMatcher",
    "canonical_dumps",
    "contains_sequence",
    "is_punctuation",
    "read_json",
    "read_jsonl",
    "sample_rng",
    "stable_hash",
    "write_json",
    "write_jsonl",
]
