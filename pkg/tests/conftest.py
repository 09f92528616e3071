"""
Pytest fixtures for hop toolkit tests.
"""

import tempfile
from pathlib import Path

import pytest


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test files."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def cache_dir(temp_dir):
    """Create a temporary cache directory."""
    cache = temp_dir / "cache"
    cache.mkdir()
    return cache


@pytest.fixture
def gardens_kb():
    """
    Cities, a sea and their countries.

    The query (gardens, country, ?) is answered by following
    Hanging Gardens -> Mumbai -> India.
    """
    from hop_toolkit.kbmodel import KnowledgeBase, Triple

    return KnowledgeBase(
        triples=(
            Triple("gardens", "country", "india"),
            Triple("mumbai", "country", "india"),
            Triple("karachi", "country", "pakistan"),
            Triple("tehran", "country", "iran"),
        ),
        entities={
            "gardens": ("Hanging Gardens",),
            "mumbai": ("Mumbai", "Bombay"),
            "maharashtra": ("Maharashtra",),
            "arabian_sea": ("Arabian Sea",),
            "india": ("India",),
            "pakistan": ("Pakistan",),
            "iran": ("Iran",),
            "karachi": ("Karachi",),
            "tehran": ("Tehran",),
        },
        relations=("country",),
    )


@pytest.fixture
def gardens_corpus():
    """One canonical document per place; no mentions annotated yet."""
    from hop_toolkit.corpus import Corpus, Document

    return Corpus([
        Document.from_text(
            "Hanging_Gardens", "Hanging Gardens",
            "The Hanging Gardens are terraced gardens in Mumbai .\n\nThey face India Gate .",
            "gardens",
        ),
        Document.from_text(
            "Mumbai", "Mumbai",
            "Mumbai is the capital of Maharashtra , India , on the Arabian Sea .",
            "mumbai",
        ),
        Document.from_text(
            "Arabian_Sea", "Arabian Sea",
            "The Arabian Sea borders India , Pakistan and Iran .",
            "arabian_sea",
        ),
        Document.from_text("India", "India", "India is a country in South Asia .", "india"),
        Document.from_text("Karachi", "Karachi", "Karachi is a port on the Arabian Sea .", "karachi"),
        Document.from_text("Tehran", "Tehran", "Tehran is a large city .", "tehran"),
    ])


@pytest.fixture
def gardens_config():
    from hop_toolkit.config import PipelineConfig

    return PipelineConfig()


@pytest.fixture
def gardens_prepared(gardens_corpus, gardens_kb, gardens_config):
    """Annotated corpus cut to first paragraphs."""
    from hop_toolkit.corpus import prepare_corpus

    return prepare_corpus(gardens_corpus, gardens_kb, gardens_config)


@pytest.fixture
def gardens_graph(gardens_prepared, gardens_kb):
    from hop_toolkit.graph import build_encyclopedic_graph

    return build_encyclopedic_graph(gardens_prepared, gardens_kb)


@pytest.fixture
def bio_kb():
    """Two drugs, three interacting proteins."""
    from hop_toolkit.kbmodel import KnowledgeBase, Triple

    return KnowledgeBase(
        triples=(Triple("drug_a", "interacts_with", "drug_b"),),
        entities={
            "drug_a": ("DrugA",),
            "drug_b": ("DrugB",),
            "p1": ("P1",),
            "p2": ("P2",),
            "p3": ("P3",),
        },
        relations=("interacts_with",),
        drug_targets={"drug_a": frozenset({"p1"}), "drug_b": frozenset({"p3"})},
        ppi=frozenset({("p1", "p2"), ("p2", "p3")}),
    )


@pytest.fixture
def bio_corpus(bio_kb):
    """Abstracts without canonical entities, annotated."""
    from hop_toolkit.corpus import Corpus, Document, Lexicon, annotate_mentions

    lexicon = Lexicon.from_kb(bio_kb)
    docs = [
        Document.from_text("abs1", "", "P1 binds P2 in the membrane ."),
        Document.from_text("abs2", "", "P2 regulates P3 expression ."),
        Document.from_text("abs3", "", "No protein is named here ."),
    ]
    return Corpus(d.with_mentions(annotate_mentions(d, lexicon)) for d in docs)


@pytest.fixture
def make_sample():
    """Factory for hand-built samples; supports are (doc_id, text) pairs."""
    from hop_toolkit.corpus import Document
    from hop_toolkit.induce import Sample
    from hop_toolkit.kbmodel import Query

    def factory(
        sample_id="s1",
        answer="India",
        candidates=("India", "Iran", "Pakistan"),
        supports=(("d1", "Mumbai is in India ."), ("d2", "Iran borders Pakistan .")),
        gold_paths=(("d1",),),
        subject="Mumbai",
        relation="country",
        candidate_paths=None,
    ):
        docs = tuple(Document.from_text(doc_id, "", text) for doc_id, text in supports)
        return Sample(
            id=sample_id,
            query=Query(subject, relation),
            answer=answer,
            candidates=tuple(candidates),
            supports=docs,
            gold_paths=tuple(tuple(c) for c in gold_paths),
            candidate_paths=candidate_paths if candidate_paths is not None else {c: 1 for c in candidates},
        )

    return factory


@pytest.fixture
def small_fixture():
    """Synthetic fixture with a test split."""
    from hop_toolkit.synth import FixtureSpec, generate_fixture

    return generate_fixture(FixtureSpec(n_facts=24, n_entities=6, test_fraction=0.25, seed=3))
