"""Split-level induction: queries in, samples and a discard ledger out."""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..config.pipeline import PipelineConfig
from ..config.policies import EdgePolicy
from ..corpus.loader import Corpus
from ..exceptions import ConfigError, KBError, SubjectAbsentError
from ..graph.bipartite import BipartiteGraph
from ..kbmodel import KnowledgeBase, endpoint_set, queries_from_kb
from .assembly import answer_in_source, assemble_sample, balance_documents
from .sample import Discard, DiscardLedger, DiscardReason, Sample
from .traversal import traverse

logger = logging.getLogger(__name__)


@dataclass
class InductionResult:
    """Samples in fact order plus what was discarded on the way."""

    samples: List[Sample] = field(default_factory=list)
    ledger: DiscardLedger = field(default_factory=DiscardLedger)
    discards: List[Tuple[str, Discard]] = field(default_factory=list)

    def __iter__(self):
        return iter((self.samples, self.ledger))


def sample_id(split: str, index: int) -> str:
    return f"{split}-{index:06d}"


def induce_split(
    kb: KnowledgeBase,
    graph: BipartiteGraph,
    corpus: Corpus,
    config: PipelineConfig,
    pool_kb: Optional[KnowledgeBase] = None,
) -> InductionResult:
    """
    Induce every sample of one split.

    Per fact: endpoints, the answer-in-source filter (encyclopedic
    policy only), traversal, balancing (when enabled) and assembly.
    Sample ids follow fact order, so discarded facts leave gaps.

    Args:
        kb: Facts of this split
        graph: Graph built over the prepared corpus
        corpus: Prepared corpus
        config: Pipeline configuration
        pool_kb: Training-split facts for candidate pools; required for
            any split other than 'train'

    Raises:
        ConfigError: If a non-training split comes without pool_kb
    """
    if pool_kb is None:
        if not config.is_training_split:
            raise ConfigError(
                f"Split '{config.split}' needs the training KB for candidate pools"
            )
        pool_kb = kb

    result = InductionResult()

    def discard(sid: str, d: Discard) -> None:
        result.ledger.record(d)
        result.discards.append((sid, d))
        logger.debug("Discarded %s: %s %s", sid, d.reason.value, d.detail)

    for index, (q, answer) in enumerate(queries_from_kb(kb)):
        sid = sample_id(config.split, index)
        try:
            endpoints = endpoint_set(kb, q, answer, pool=pool_kb)
        except (KBError, ConfigError) as e:
            discard(sid, Discard(DiscardReason.ANSWER_NOT_IN_POOL, str(e)))
            continue

        if config.policy is EdgePolicy.ENCYCLOPEDIC and answer_in_source(
            q, answer, corpus, kb, case_sensitive=config.case_sensitive
        ):
            discard(sid, Discard(DiscardReason.ANSWER_IN_SOURCE))
            continue

        try:
            traversal = traverse(graph, q, answer, endpoints, config.max_chain)
        except SubjectAbsentError as e:
            discard(sid, Discard(DiscardReason.SUBJECT_ABSENT, str(e)))
            continue

        if config.balance:
            balanced = balance_documents(traversal, q, answer, config.max_docs)
            if isinstance(balanced, Discard):
                discard(sid, balanced)
                continue
            traversal = balanced

        outcome = assemble_sample(
            traversal, q, answer, kb, corpus, sid,
            max_docs=config.max_docs,
            max_cands=config.max_cands,
            seed=config.seed,
        )
        if isinstance(outcome, Discard):
            discard(sid, outcome)
        else:
            result.samples.append(outcome)

    logger.info(
        "Induced split %s: %d samples, %d discarded %s",
        config.split, len(result.samples), result.ledger.total, result.ledger.to_dict(),
    )
    return result
