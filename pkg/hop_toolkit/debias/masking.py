"""Candidate masking with per-sample placeholder tokens."""

import re
from dataclasses import dataclass, field, replace
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ..corpus.document import Span, detokenize, token_spans, tokenize
from ..exceptions import MaskingError, ScoringError
from ..induce.sample import Sample
from ..utils.seeding import sample_rng
from ..utils.text import PhraseMatcher

PLACEHOLDER_PATTERN = re.compile(r"^MASK\d+$")


def placeholder(index: int) -> str:
    return f"MASK{index}"


def placeholder_pool(size: int = 100) -> List[str]:
    """The fixed pool MASK0 ... MASK{size-1}."""
    return [placeholder(i) for i in range(size)]


@dataclass(frozen=True)
class MaskMap:
    """
    Candidate -> placeholder assignment of one sample.

    Attributes:
        forward: Candidate surface form -> placeholder
        variants: Placeholder -> original text of each masked occurrence in
            support order; empty when every occurrence equals the candidate
    """

    forward: Mapping[str, str]
    variants: Mapping[str, Tuple[str, ...]] = field(default_factory=dict)

    @property
    def inverse(self) -> Dict[str, str]:
        return {p: c for c, p in self.forward.items()}

    def __len__(self) -> int:
        return len(self.forward)

    @classmethod
    def of(cls, sample: Sample) -> "MaskMap":
        """Mask map stored on a masked sample (empty for unmasked ones)."""
        return cls(forward=dict(sample.mask_map or {}), variants=dict(sample.mask_variants or {}))


def _source_spans(tokens: Sequence[str], source: Optional[str]) -> Optional[List[Span]]:
    """Token spans of ``source`` when it tokenizes to ``tokens``, else None."""
    if source is None:
        return None
    spans = token_spans(source)
    if tuple(source[start:end] for start, end in spans) != tuple(tokens):
        return None
    return spans


def _rewrite(
    tokens: Sequence[str],
    source: Optional[str],
    spans: Optional[List[Span]],
    edits: Sequence[Tuple[int, int, str]],
) -> Tuple[Tuple[str, ...], Optional[str]]:
    """
    Replace token ranges ``[start, end)`` by ``text``.

    The source string is spliced at the same places when its spans are
    known; otherwise no source is returned.
    """
    out: List[str] = []
    pieces: List[str] = []
    position = 0
    cursor = 0
    for start, end, text in edits:
        out.extend(tokens[position:start])
        out.extend(tokenize(text))
        position = end
        if spans is not None:
            pieces.append(source[cursor:spans[start][0]])
            pieces.append(text)
            cursor = spans[end - 1][1]
    out.extend(tokens[position:])
    if spans is None:
        return tuple(out), None
    pieces.append(source[cursor:])
    return tuple(out), "".join(pieces)


def _mask_field(
    tokens: Sequence[str],
    source: Optional[str],
    matcher: PhraseMatcher,
    forward: Mapping[str, str],
    occurrences: Dict[str, List[str]],
) -> Tuple[Tuple[str, ...], Optional[str]]:
    spans = _source_spans(tokens, source)
    edits = []
    for match in matcher.find(tokens):
        token = forward[match.label]
        if spans is not None:
            original = source[spans[match.start][0]:spans[match.end - 1][1]]
        else:
            original = detokenize(tokens[match.start:match.end])
        occurrences.setdefault(token, []).append(original)
        edits.append((match.start, match.end, token))
    return _rewrite(tokens, source, spans, edits)


def mask_sample(sample: Sample, pool_size: int = 100, seed: int = 0) -> Tuple[Sample, MaskMap]:
    """
    Replace every candidate mention by the candidate's placeholder.

    Placeholders are drawn without replacement from MASK0..MASK{pool_size-1}
    with the sample's own random stream, so the same candidate usually
    gets different placeholders in different samples. Mentions are
    matched case-insensitively, longest first, in titles and bodies;
    candidates and the answer are replaced as well.

    Raises:
        MaskingError: If there are more candidates than placeholders, the
            sample is already masked, or it contains placeholder-shaped tokens
    """
    if sample.masked:
        raise MaskingError(f"Sample {sample.id} is already masked")
    if len(sample.candidates) > pool_size:
        raise MaskingError(
            f"Sample {sample.id} has {len(sample.candidates)} candidates, "
            f"more than the {pool_size} placeholders"
        )
    for doc in sample.supports:
        if any(PLACEHOLDER_PATTERN.match(t) for t in doc.tokens):
            raise MaskingError(f"Support {doc.doc_id} of {sample.id} contains a placeholder token")

    rng = sample_rng(seed, f"mask:{sample.id}")
    drawn = rng.choice(pool_size, size=len(sample.candidates), replace=False)
    forward = {c: placeholder(int(i)) for c, i in zip(sample.candidates, drawn)}

    matcher: PhraseMatcher[str] = PhraseMatcher(case_sensitive=False)
    for candidate in sample.candidates:
        tokens = tokenize(candidate)
        if tokens:
            matcher.add(tokens, candidate)

    occurrences: Dict[str, List[str]] = {}
    supports = []
    for doc in sample.supports:
        title, source_title = _mask_field(doc.title, doc.source_title, matcher, forward, occurrences)
        body, source_text = _mask_field(doc.body, doc.source_text, matcher, forward, occurrences)
        supports.append(doc.with_tokens(title, body, source_title=source_title, source_text=source_text))

    inverse = {p: c for c, p in forward.items()}
    needs_variants = any(
        text != inverse[p] for p, texts in occurrences.items() for text in texts
    )
    variants = {p: tuple(texts) for p, texts in occurrences.items()} if needs_variants else {}

    masked = replace(
        sample,
        answer=forward[sample.answer],
        candidates=tuple(forward[c] for c in sample.candidates),
        supports=tuple(supports),
        candidate_paths={forward[c]: n for c, n in sample.candidate_paths.items()},
        mask_map=forward,
        mask_variants=variants or None,
    )
    return masked, MaskMap(forward=forward, variants=variants)


def unmask_sample(sample: Sample) -> Sample:
    """
    Undo mask_sample using the mask map stored on the sample.

    Raises:
        MaskingError: If the sample is not masked
    """
    if not sample.masked:
        raise MaskingError(f"Sample {sample.id} is not masked")
    mask_map = MaskMap.of(sample)
    inverse = mask_map.inverse
    pending = {p: list(texts) for p, texts in mask_map.variants.items()}

    def restore(tokens: Sequence[str], source: Optional[str]) -> Tuple[Tuple[str, ...], Optional[str]]:
        edits = []
        for index, token in enumerate(tokens):
            if token in inverse:
                text = pending[token].pop(0) if pending.get(token) else inverse[token]
                edits.append((index, index + 1, text))
        return _rewrite(tokens, source, _source_spans(tokens, source), edits)

    supports = []
    for doc in sample.supports:
        title, source_title = restore(doc.title, doc.source_title)
        body, source_text = restore(doc.body, doc.source_text)
        supports.append(doc.with_tokens(title, body, source_title=source_title, source_text=source_text))

    return replace(
        sample,
        answer=inverse[sample.answer],
        candidates=tuple(inverse[c] for c in sample.candidates),
        supports=tuple(supports),
        candidate_paths={inverse[c]: n for c, n in sample.candidate_paths.items()},
        mask_map=None,
        mask_variants=None,
    )


def unmask_prediction(
    prediction: str,
    mask_map: Optional[Union[MaskMap, Mapping[str, str]]],
) -> str:
    """
    Original candidate behind a placeholder.

    An empty or missing map returns the prediction unchanged.

    Raises:
        ScoringError: If the placeholder is not part of the map
    """
    if not mask_map:
        return prediction
    forward = mask_map.forward if isinstance(mask_map, MaskMap) else mask_map
    inverse = {p: c for c, p in forward.items()}
    if prediction not in inverse:
        raise ScoringError(f"Placeholder {prediction!r} is not in the mask map")
    return inverse[prediction]
