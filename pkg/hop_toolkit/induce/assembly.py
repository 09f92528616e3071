"""Sample assembly, document balancing and the answer-in-source filter."""

import logging
from typing import Dict, List, Set, Union

from ..corpus.document import tokenize
from ..corpus.loader import Corpus
from ..exceptions import GraphBuildError
from ..kbmodel import KnowledgeBase, Query
from ..utils.seeding import sample_rng
from ..utils.text import contains_sequence
from .sample import Chain, Discard, DiscardReason, Sample, TraversalResult

logger = logging.getLogger(__name__)


def _group_candidates(result: TraversalResult, answer: str, kb: KnowledgeBase) -> Dict[str, List[str]]:
    """
    Surface form -> endpoint ids, merging forms equal up to case.

    The answer's group uses the answer's own surface form; other groups
    use their lexicographically smallest form.
    """
    groups: Dict[str, List[str]] = {}
    for entity in sorted(result.reached_endpoints):
        groups.setdefault(kb.surface_form(entity).lower(), []).append(entity)

    named: Dict[str, List[str]] = {}
    for members in groups.values():
        if answer in members:
            form = kb.surface_form(answer)
        else:
            form = min(kb.surface_form(e) for e in members)
        named[form] = members
    return named


def assemble_sample(
    result: TraversalResult,
    q: Query,
    answer: str,
    kb: KnowledgeBase,
    corpus: Corpus,
    sample_id: str,
    max_docs: int = 64,
    max_cands: int = 100,
    seed: int = 0,
) -> Union[Sample, Discard]:
    """
    Turn a traversal result into a sample.

    Candidates are the reached endpoints' surface forms, deduplicated
    case-insensitively before the candidate cap is applied. Supports are
    the documents on the chains, shuffled with the sample's own stream.

    Returns:
        Sample, or Discard naming the violated condition
    """
    if answer not in result.reached_endpoints:
        return Discard(DiscardReason.ANSWER_UNREACHED, f"{answer} not reached from {q}")

    doc_ids = sorted(result.visited_docs)
    if not doc_ids:
        return Discard(DiscardReason.EMPTY_SUPPORT)
    if len(doc_ids) > max_docs:
        return Discard(DiscardReason.TOO_MANY_DOCS, f"{len(doc_ids)} > {max_docs}")

    groups = _group_candidates(result, answer, kb)
    if len(groups) > max_cands:
        return Discard(DiscardReason.TOO_MANY_CANDS, f"{len(groups)} > {max_cands}")

    answer_form = kb.surface_form(answer)
    candidate_paths = {
        form: sum(len(result.paths[e]) for e in members)
        for form, members in groups.items()
    }
    gold: Set[Chain] = set()
    for entity in groups[answer_form]:
        gold.update(result.paths[entity])

    try:
        supports = [corpus[doc_id] for doc_id in doc_ids]
    except KeyError as e:
        raise GraphBuildError(f"Graph document {e} is missing from the corpus") from e
    order = sample_rng(seed, sample_id).permutation(len(supports))

    return Sample(
        id=sample_id,
        query=Query(subject=kb.surface_form(q.subject), relation=q.relation),
        answer=answer_form,
        candidates=tuple(sorted(groups)),
        supports=tuple(supports[i] for i in order),
        gold_paths=tuple(sorted(gold, key=lambda c: (len(c), c))),
        candidate_paths=candidate_paths,
    )


def balance_documents(
    result: TraversalResult,
    q: Query,
    answer: str,
    max_docs: int = 64,
) -> Union[TraversalResult, Discard]:
    """
    Subsample chains so every kept candidate has the same number of chains.

    The answer's shortest chain goes in first. Alternatives then take
    turns, ordered by their shortest chain length and id, each adding
    one whole chain per turn. In the first turn an alternative whose
    chain does not fit is dropped. In later turns every kept candidate,
    answer included, must add its next chain; if one cannot, the whole
    turn is undone and balancing stops.

    Returns:
        TraversalResult restricted to the included chains, or Discard
    """
    answer_chains = result.chains_for(answer)
    if not answer_chains:
        return Discard(DiscardReason.ANSWER_UNREACHED, f"{answer} has no chain for {q}")

    docs: Set[str] = set(answer_chains[0])
    if len(docs) > max_docs:
        return Discard(DiscardReason.TOO_MANY_DOCS, f"answer chain alone exceeds {max_docs}")
    included: Dict[str, List[Chain]] = {answer: [answer_chains[0]]}

    alternatives = sorted(
        (e for e in result.reached_endpoints if e != answer),
        key=lambda e: (len(result.chains_for(e)[0]), e),
    )
    for entity in alternatives:
        chain = result.chains_for(entity)[0]
        if len(docs.union(chain)) <= max_docs:
            docs.update(chain)
            included[entity] = [chain]

    participants = [answer] + [e for e in alternatives if e in included]
    turn = 1
    while True:
        added_docs = set(docs)
        added: Dict[str, Chain] = {}
        for entity in participants:
            chains = result.chains_for(entity)
            if turn >= len(chains) or len(added_docs.union(chains[turn])) > max_docs:
                added = {}
                break
            added_docs.update(chains[turn])
            added[entity] = chains[turn]
        if not added:
            break
        docs = added_docs
        for entity, chain in added.items():
            included[entity].append(chain)
        turn += 1

    logger.debug("Balanced %s: %d candidates x %d chains, %d documents",
                 q, len(included), turn, len(docs))
    return result.restricted(included)


def answer_in_source(
    q: Query,
    answer: str,
    corpus: Corpus,
    kb: KnowledgeBase,
    case_sensitive: bool = False,
) -> bool:
    """
    True if a name variant of the answer occurs in the subject's own document.

    Returns False when the subject has no canonical document.
    """
    doc = corpus.canonical_document(q.subject)
    if doc is None:
        return False
    tokens = doc.tokens
    for name in kb.names(answer):
        variant = tokenize(name)
        if variant and contains_sequence(tokens, variant, case_sensitive=case_sensitive):
            return True
    return False
