"""Answer-frequency capping and document blocklists."""

import logging
from collections import Counter
from typing import AbstractSet, Dict, List, Mapping, Optional, Sequence, Set

from ..exceptions import ConfigError
from ..induce.sample import Sample
from ..utils.seeding import sample_rng

logger = logging.getLogger(__name__)


def _per_answer_limit(counts: Counter, cap: float) -> int:
    """Largest per-answer count such that no answer exceeds ``cap`` of the capped total."""
    total = sum(counts.values())
    while True:
        limit = int(cap * total + 1e-9)
        if limit < 1:
            return 0
        new_total = sum(min(c, limit) for c in counts.values())
        if new_total == total:
            return limit
        total = new_total


def cap_answer_frequency(
    samples: Sequence[Sample],
    cap: float = 0.001,
    seed: int = 0,
) -> List[Sample]:
    """
    Subsample so that no answer accounts for more than ``cap`` of the split.

    The per-answer limit is the fixed point of limit = floor(cap * total),
    where total shrinks as over-represented answers are cut. Which samples
    of an over-represented answer survive is a seeded uniform choice;
    the survivors keep their input order.

    Raises:
        ConfigError: If cap is not in (0, 1]
    """
    if not 0 < cap <= 1:
        raise ConfigError(f"answer cap must be in (0, 1], got {cap!r}")
    counts = Counter(s.answer for s in samples)
    if not counts:
        return []

    limit = _per_answer_limit(counts, cap)
    if limit < 1:
        logger.warning(
            "Answer cap %.4g is below one sample for %d samples; keeping one per answer",
            cap, len(samples),
        )
        limit = 1

    positions: Dict[str, List[int]] = {}
    for index, sample in enumerate(samples):
        positions.setdefault(sample.answer, []).append(index)

    keep: Set[int] = set()
    for answer, indices in positions.items():
        if len(indices) <= limit:
            keep.update(indices)
            continue
        rng = sample_rng(seed, f"answer-cap:{answer}")
        chosen = rng.choice(len(indices), size=limit, replace=False)
        keep.update(indices[int(i)] for i in chosen)

    kept = [s for i, s in enumerate(samples) if i in keep]
    logger.info("Answer cap %.4g (limit %d per answer): kept %d of %d samples",
                cap, limit, len(kept), len(samples))
    return kept


def apply_blocklist(
    samples: Sequence[Sample],
    blocked_entities: AbstractSet[str],
    doc_entities: Optional[Mapping[str, str]] = None,
) -> List[Sample]:
    """
    Remove support documents about blocked entities.

    Gold chains through a removed document are dropped; a sample with no
    gold chain left is dropped. The answer's ``candidate_paths`` entry is
    recounted from the surviving gold chains.

    Args:
        samples: Samples to filter
        blocked_entities: Canonical entity ids to block
        doc_entities: Document id -> canonical entity, usually from the
            corpus; defaults to each support's own ``canonical_entity``
    """
    if not blocked_entities:
        return list(samples)

    def entity_of(doc) -> Optional[str]:
        if doc_entities is not None:
            return doc_entities.get(doc.doc_id)
        return doc.canonical_entity

    kept = []
    for sample in samples:
        removed = {doc.doc_id for doc in sample.supports if entity_of(doc) in blocked_entities}
        if not removed:
            kept.append(sample)
            continue
        gold = tuple(chain for chain in sample.gold_paths if not removed.intersection(chain))
        if not gold:
            continue
        candidate_paths = dict(sample.candidate_paths)
        if sample.answer in candidate_paths:
            candidate_paths[sample.answer] = len(gold)
        kept.append(sample.with_supports(
            [doc for doc in sample.supports if doc.doc_id not in removed],
            gold_paths=gold,
            candidate_paths=candidate_paths,
        ))

    logger.info("Blocklist of %d entities: kept %d of %d samples",
                len(blocked_entities), len(kept), len(samples))
    return kept
