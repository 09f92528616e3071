"""
Tests for the bipartite graph and edge policies.
"""

import json

import pytest


class TestBipartiteGraph:
    """Tests for BipartiteGraph."""

    def test_same_kind_edge_rejected(self):
        from hop_toolkit.exceptions import GraphBuildError
        from hop_toolkit.graph import BipartiteGraph

        graph = BipartiteGraph("test")
        a = graph.add_document("a")
        b = graph.add_document("b")
        with pytest.raises(GraphBuildError):
            graph.add_edge(a, b)

    def test_unknown_node(self):
        """Lookups of missing nodes raise NodeNotFoundError, also a KeyError."""
        from hop_toolkit.exceptions import NodeNotFoundError
        from hop_toolkit.graph import BipartiteGraph, entity_node, neighbors

        graph = BipartiteGraph("test")
        with pytest.raises(NodeNotFoundError):
            neighbors(graph, entity_node("nobody"))
        with pytest.raises(KeyError):
            graph.docs_into("nobody")

    def test_entity_and_document_may_share_id(self):
        from hop_toolkit.graph import BipartiteGraph, doc_node, entity_node

        graph = BipartiteGraph("test")
        graph.add_entity("India")
        graph.add_document("India")
        graph.add_edge(entity_node("India"), doc_node("India"))
        assert graph.number_of_entities == 1
        assert graph.number_of_documents == 1
        assert graph.entity_docs("India") == {"India"}
        assert graph.doc_entities("India") == frozenset()


class TestEncyclopedicPolicy:
    """Tests for the encyclopedic edge policy."""

    def test_doc_points_to_mentions(self, gardens_graph):
        assert gardens_graph.doc_entities("Mumbai") == {"mumbai", "maharashtra", "india", "arabian_sea"}

    def test_entity_points_to_canonical_only(self, gardens_graph):
        """Entities point to their own document and nothing else."""
        for entity, docs in gardens_graph.entity_to_docs.items():
            assert len(docs) <= 1
        assert gardens_graph.entity_docs("india") == {"India"}
        assert gardens_graph.entity_docs("maharashtra") == frozenset()

    def test_truncated_mentions_make_no_edges(self, gardens_graph):
        """The second paragraph of the gardens document is gone."""
        assert gardens_graph.doc_entities("Hanging_Gardens") == {"gardens", "mumbai"}

    def test_duplicate_canonical(self, gardens_kb):
        from hop_toolkit.corpus import Corpus, Document
        from hop_toolkit.exceptions import GraphBuildError
        from hop_toolkit.graph import build_encyclopedic_graph

        corpus = Corpus([
            Document.from_text("a", "", "India", "india", mentions=[]),
            Document.from_text("b", "", "India", "india", mentions=[]),
        ])
        with pytest.raises(GraphBuildError, match="canonical"):
            build_encyclopedic_graph(corpus, gardens_kb)

    def test_build_is_deterministic(self, gardens_prepared, gardens_kb, gardens_graph):
        from hop_toolkit.graph import build_encyclopedic_graph

        assert build_encyclopedic_graph(gardens_prepared, gardens_kb) == gardens_graph


class TestBiomedicalPolicy:
    """Tests for the biomedical edge policy."""

    def test_edges(self, bio_corpus, bio_kb):
        from hop_toolkit.graph import build_biomedical_graph

        graph = build_biomedical_graph(bio_corpus, bio_kb)
        assert graph.doc_entities("abs1") == {"p1", "p2", "drug_a"}
        assert graph.doc_entities("abs2") == {"p2", "p3", "drug_b"}
        assert graph.entity_docs("drug_a") == {"abs1"}
        # a protein points to a document mentioning it and one of its partners
        assert graph.entity_docs("p2") == {"abs1", "abs2"}
        assert graph.entity_docs("p1") == {"abs1"}
        assert graph.doc_entities("abs3") == frozenset()

    def test_drug_name_edges(self, bio_kb):
        from hop_toolkit.corpus import Corpus, Document, Lexicon, annotate_mentions
        from hop_toolkit.graph import build_biomedical_graph

        doc = Document.from_text("abs", "", "DrugB was tested .")
        corpus = Corpus([doc.with_mentions(annotate_mentions(doc, Lexicon.from_kb(bio_kb)))])
        assert build_biomedical_graph(corpus, bio_kb).doc_entities("abs") == frozenset()
        with_names = build_biomedical_graph(corpus, bio_kb, drug_name_edges=True)
        assert with_names.doc_entities("abs") == {"drug_b"}
        assert with_names.entity_docs("drug_b") == {"abs"}

    def test_missing_tables(self, gardens_prepared, gardens_kb):
        from hop_toolkit.exceptions import ConfigError
        from hop_toolkit.graph import build_biomedical_graph

        with pytest.raises(ConfigError):
            build_biomedical_graph(gardens_prepared, gardens_kb)


class TestCustomPolicy:
    """Tests for rule files."""

    def test_rule_file_reproduces_encyclopedic(self, temp_dir, gardens_prepared, gardens_kb, gardens_graph):
        """A rule file with the encyclopedic rules builds the same edges."""
        from hop_toolkit.graph import ENCYCLOPEDIC_RULES, build_graph_from_rules, load_rules

        path = temp_dir / "rules.json"
        path.write_text(json.dumps({"rules": [r.to_dict() for r in ENCYCLOPEDIC_RULES]}), encoding="utf-8")
        graph = build_graph_from_rules(gardens_prepared, gardens_kb, load_rules(path))
        assert graph.policy_tag == "custom"
        assert set(graph.edges()) == set(gardens_graph.edges())

    def test_build_graph_dispatches_custom(self, temp_dir, gardens_prepared, gardens_kb):
        from hop_toolkit.config import PipelineConfig
        from hop_toolkit.graph import build_graph

        path = temp_dir / "rules.json"
        path.write_text(json.dumps([{"source_kind": "doc", "condition": "mentions"}]), encoding="utf-8")
        config = PipelineConfig(policy="custom", rules_path=path)
        graph = build_graph(gardens_prepared, gardens_kb, config)
        assert graph.entity_docs("india") == frozenset()
        assert "india" in graph.doc_entities("Arabian_Sea")

    def test_invalid_rule(self):
        from hop_toolkit.exceptions import ConfigError
        from hop_toolkit.graph import EdgeRule

        with pytest.raises(ConfigError):
            EdgeRule("doc", "cites")
        with pytest.raises(ConfigError):
            EdgeRule("doc", "mentions_table_partner")
        with pytest.raises(ConfigError):
            EdgeRule.from_dict({"source_kind": "doc", "target_kind": "doc", "condition": "mentions"})

    def test_table_rules_need_tables(self, gardens_prepared, gardens_kb):
        from hop_toolkit.exceptions import ConfigError
        from hop_toolkit.graph import BIOMEDICAL_RULES, build_graph_from_rules

        with pytest.raises(ConfigError):
            build_graph_from_rules(gardens_prepared, gardens_kb, BIOMEDICAL_RULES)
