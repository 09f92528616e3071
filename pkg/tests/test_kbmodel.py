"""
Tests for the knowledge base model.
"""

import json

import pytest


class TestQueries:
    """Tests for query extraction."""

    def test_one_query_per_fact_in_order(self, gardens_kb):
        """queries_from_kb should follow the fact order one to one."""
        from hop_toolkit.kbmodel import Query, queries_from_kb

        pairs = queries_from_kb(gardens_kb)
        assert len(pairs) == len(gardens_kb.triples)
        assert pairs[0] == (Query("gardens", "country"), "india")
        assert [a for _, a in pairs] == [t.object for t in gardens_kb.triples]

    def test_query_str(self):
        from hop_toolkit.kbmodel import Query

        assert str(Query("gardens", "country")) == "(gardens, country, ?)"


class TestCandidates:
    """Tests for type-consistent candidate pools."""

    def test_objects_of_relation(self, gardens_kb):
        """Candidates are all objects seen with the relation."""
        from hop_toolkit.kbmodel import type_consistent_candidates

        assert type_consistent_candidates(gardens_kb, "country") == {"india", "pakistan", "iran"}

    def test_unknown_relation(self, gardens_kb):
        """An unknown relation is a configuration error."""
        from hop_toolkit.exceptions import ConfigError
        from hop_toolkit.kbmodel import type_consistent_candidates

        with pytest.raises(ConfigError):
            type_consistent_candidates(gardens_kb, "capital_of")


class TestEndpoints:
    """Tests for endpoint_set."""

    def test_endpoints_contain_answer(self, gardens_kb):
        from hop_toolkit.kbmodel import Query, endpoint_set

        endpoints = endpoint_set(gardens_kb, Query("gardens", "country"), "india")
        assert endpoints == {"india", "pakistan", "iran"}

    def test_closed_world_excludes_other_true_objects(self):
        """Other true objects of the same query must not be candidates."""
        from hop_toolkit.kbmodel import KnowledgeBase, Query, Triple, endpoint_set

        kb = KnowledgeBase(
            triples=(
                Triple("river", "country", "a"),
                Triple("river", "country", "b"),
                Triple("lake", "country", "c"),
            ),
            entities={e: (e,) for e in ("river", "lake", "a", "b", "c")},
            relations=("country",),
        )
        endpoints = endpoint_set(kb, Query("river", "country"), "a")
        assert endpoints == {"a", "c"}

    def test_subject_is_excluded(self):
        """The subject is never its own candidate."""
        from hop_toolkit.kbmodel import KnowledgeBase, Query, Triple, endpoint_set

        kb = KnowledgeBase(
            triples=(Triple("x", "similar_to", "y"), Triple("y", "similar_to", "x")),
            entities={"x": ("x",), "y": ("y",)},
            relations=("similar_to",),
        )
        assert endpoint_set(kb, Query("x", "similar_to"), "y") == {"y"}

    def test_answer_outside_pool(self, gardens_kb):
        """An answer the pool never saw raises KBError."""
        from hop_toolkit.exceptions import KBError
        from hop_toolkit.kbmodel import Query, endpoint_set

        pool = gardens_kb.restricted(gardens_kb.triples[2:])
        with pytest.raises(KBError):
            endpoint_set(gardens_kb, Query("gardens", "country"), "india", pool=pool)

    def test_pool_defines_candidates(self, gardens_kb):
        """With a pool, candidates come from the pool's facts."""
        from hop_toolkit.kbmodel import Query, Triple, endpoint_set

        split_kb = gardens_kb.restricted([Triple("gardens", "country", "india")])
        endpoints = endpoint_set(split_kb, Query("gardens", "country"), "india", pool=gardens_kb)
        assert endpoints == {"india", "pakistan", "iran"}


class TestKnowledgeBase:
    """Tests for KnowledgeBase lookups."""

    def test_surface_form_is_first_variant(self, gardens_kb):
        assert gardens_kb.surface_form("mumbai") == "Mumbai"
        assert gardens_kb.names("mumbai") == ("Mumbai", "Bombay")

    def test_surface_form_of_unknown_entity(self, gardens_kb):
        """Unknown ids fall back to the id itself."""
        assert gardens_kb.surface_form("atlantis") == "atlantis"

    def test_auxiliary_tables(self, gardens_kb, bio_kb):
        assert not gardens_kb.has_auxiliary_tables
        assert bio_kb.has_auxiliary_tables
        assert bio_kb.proteins == {"p1", "p2", "p3"}

    def test_interactions_are_symmetric(self, bio_kb):
        partners = bio_kb.interaction_partners
        assert partners["p2"] == {"p1", "p3"}
        assert partners["p1"] == {"p2"}


class TestValidation:
    """Tests for validate_kb."""

    def test_valid_kb(self, gardens_kb):
        from hop_toolkit.kbmodel import validate_kb

        report = validate_kb(gardens_kb)
        assert not report
        assert len(report) == 0

    def test_findings(self):
        """Duplicates, dangling references and empty names are reported."""
        from hop_toolkit.kbmodel import KnowledgeBase, Triple, validate_kb

        kb = KnowledgeBase(
            triples=(
                Triple("a", "r", "b"),
                Triple("a", "r", "b"),
                Triple("a", "q", "ghost"),
            ),
            entities={"a": ("A",), "b": ()},
            relations=("r",),
        )
        report = validate_kb(kb)
        assert len(report.by_kind("duplicate_triple")) == 1
        assert len(report.by_kind("dangling_entity")) == 1
        assert len(report.by_kind("dangling_relation")) == 1
        assert len(report.by_kind("empty_names")) == 1
        assert "duplicate_triple" in report.summary()


class TestSerialization:
    """Tests for KB JSON loading."""

    def test_dict_round_trip(self, bio_kb):
        from hop_toolkit.kbmodel import kb_from_dict, kb_to_dict

        assert kb_from_dict(kb_to_dict(bio_kb)) == bio_kb

    def test_load_kb(self, temp_dir, gardens_kb):
        from hop_toolkit.kbmodel import kb_to_dict, load_kb

        path = temp_dir / "kb.json"
        path.write_text(json.dumps(kb_to_dict(gardens_kb)), encoding="utf-8")
        loaded = load_kb(path)
        assert loaded.triples == gardens_kb.triples
        assert loaded.drug_targets is None

    def test_missing_field(self, temp_dir):
        """A KB without triples cannot be loaded."""
        from hop_toolkit.exceptions import KBError
        from hop_toolkit.kbmodel import load_kb

        path = temp_dir / "kb.json"
        path.write_text(json.dumps({"entities": {}, "relations": []}), encoding="utf-8")
        with pytest.raises(KBError, match="triples"):
            load_kb(path)

    def test_missing_file(self, temp_dir):
        from hop_toolkit.exceptions import KBError
        from hop_toolkit.kbmodel import load_kb

        with pytest.raises(KBError):
            load_kb(temp_dir / "absent.json")
