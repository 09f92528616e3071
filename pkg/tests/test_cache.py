"""
Tests for the graph cache.
"""

import json

import pytest


class TestCacheKey:
    """Tests for cache key generation."""

    def test_key_changes_with_inputs(self, temp_dir):
        """Graph cache key should depend on file contents and policy."""
        from hop_toolkit.config import PipelineConfig
        from hop_toolkit.graph import GraphCache

        kb = temp_dir / "kb.json"
        corpus = temp_dir / "corpus.jsonl"
        kb.write_text(json.dumps({"entities": {}, "relations": [], "triples": []}))
        corpus.write_text("")
        cache = GraphCache(base_dir=temp_dir / "graphs")

        base = cache.generate_key(kb, corpus, PipelineConfig())
        assert base == cache.generate_key(kb, corpus, PipelineConfig())
        assert base != cache.generate_key(kb, corpus, PipelineConfig(truncation="none"))
        corpus.write_text('{"doc_id": "a", "title": "", "text": "x"}\n')
        assert base != cache.generate_key(kb, corpus, PipelineConfig())

    def test_key_shape_and_rules_file(self, temp_dir):
        """Custom policies hash their rule file too."""
        from hop_toolkit.config import PipelineConfig
        from hop_toolkit.graph import GraphCache

        kb = temp_dir / "kb.json"
        corpus = temp_dir / "corpus.jsonl"
        rules = temp_dir / "rules.json"
        kb.write_text("{}")
        corpus.write_text("")
        rules.write_text("[]")
        cache = GraphCache(base_dir=temp_dir / "graphs")
        config = PipelineConfig(policy="custom", rules_path=rules)

        first = cache.generate_key(kb, corpus, config)
        assert len(first) == 16
        assert all(c in "0123456789abcdef" for c in first)
        rules.write_text("[{}]")
        assert cache.generate_key(kb, corpus, config) != first

    def test_seed_does_not_change_key(self, temp_dir):
        """Settings that do not touch edges leave the key alone."""
        from hop_toolkit.config import PipelineConfig
        from hop_toolkit.graph import GraphCache

        kb = temp_dir / "kb.json"
        corpus = temp_dir / "corpus.jsonl"
        kb.write_text("{}")
        corpus.write_text("")
        cache = GraphCache(base_dir=temp_dir / "graphs")
        assert cache.generate_key(kb, corpus, PipelineConfig(seed=1)) == cache.generate_key(
            kb, corpus, PipelineConfig(seed=2)
        )


class TestGraphCache:
    """Tests for GraphCache."""

    def test_cache_creation(self, temp_dir):
        """GraphCache should create its directory."""
        from hop_toolkit.graph import GraphCache

        cache = GraphCache(base_dir=temp_dir / "graphs")
        assert cache.base_dir.exists()

    def test_miss_returns_none(self, cache_dir):
        from hop_toolkit.graph import GraphCache

        cache = GraphCache(base_dir=cache_dir)
        assert cache.load("nonexistent") is None

    def test_save_and_load(self, cache_dir, gardens_graph):
        from hop_toolkit.graph import GraphCache

        cache = GraphCache(base_dir=cache_dir)
        path = cache.save("abc123", gardens_graph)
        assert path.parent == cache.base_dir
        assert "abc123" in path.name
        assert cache.load("abc123") == gardens_graph

    def test_corrupt_file(self, temp_dir):
        from hop_toolkit.exceptions import GraphBuildError
        from hop_toolkit.graph import load_graph

        path = temp_dir / "graph.pkl"
        path.write_bytes(b"not a pickle")
        with pytest.raises(GraphBuildError):
            load_graph(path)
