"""
Tests for configuration module.
"""

import json

import pytest


class TestEdgePolicy:
    """Tests for EdgePolicy enum."""

    @pytest.mark.parametrize("name,expected", [
        ("encyclopedic", "ENCYCLOPEDIC"),
        ("Wiki", "ENCYCLOPEDIC"),
        ("BIOMEDICAL", "BIOMEDICAL"),
        ("bio", "BIOMEDICAL"),
        ("custom", "CUSTOM"),
    ])
    def test_from_string(self, name, expected):
        from hop_toolkit.config import EdgePolicy

        assert EdgePolicy.from_string(name) is EdgePolicy[expected]

    def test_from_string_invalid(self):
        from hop_toolkit.config import EdgePolicy

        with pytest.raises(ValueError, match="Unknown edge policy"):
            EdgePolicy.from_string("legal")


class TestTruncationPolicy:
    """Tests for TruncationPolicy enum."""

    def test_aliases(self):
        from hop_toolkit.config import TruncationPolicy

        assert TruncationPolicy.from_string("first-paragraph") is TruncationPolicy.FIRST_PARAGRAPH
        assert TruncationPolicy.from_string("tokens") is TruncationPolicy.MAX_TOKENS
        assert TruncationPolicy.from_string("None") is TruncationPolicy.NONE

    def test_invalid(self):
        from hop_toolkit.config import TruncationPolicy

        with pytest.raises(ValueError):
            TruncationPolicy.from_string("sentence")

    def test_default_for(self):
        from hop_toolkit.config import EdgePolicy, TruncationPolicy

        assert TruncationPolicy.default_for(EdgePolicy.ENCYCLOPEDIC) is TruncationPolicy.FIRST_PARAGRAPH
        assert TruncationPolicy.default_for(EdgePolicy.BIOMEDICAL) is TruncationPolicy.MAX_TOKENS
        assert TruncationPolicy.default_for(EdgePolicy.CUSTOM) is TruncationPolicy.FIRST_PARAGRAPH


class TestPipelineConfig:
    """Tests for PipelineConfig."""

    def test_defaults(self):
        from hop_toolkit.config import EdgePolicy, PipelineConfig, TruncationPolicy

        config = PipelineConfig()
        assert config.policy is EdgePolicy.ENCYCLOPEDIC
        assert (config.max_chain, config.max_docs, config.max_cands) == (3, 64, 100)
        assert config.cooc_threshold == 20
        assert config.answer_cap == 0.001
        assert config.mask_pool_size == 100
        assert config.truncation is TruncationPolicy.FIRST_PARAGRAPH
        assert config.balance is False
        assert config.is_training_split

    def test_biomedical_derived_defaults(self):
        from hop_toolkit.config import PipelineConfig, TruncationPolicy

        config = PipelineConfig(policy="biomedical")
        assert config.truncation is TruncationPolicy.MAX_TOKENS
        assert config.balance is True

    def test_explicit_balance_wins(self):
        from hop_toolkit.config import PipelineConfig

        assert PipelineConfig(policy="biomedical", balance=False).balance is False

    @pytest.mark.parametrize("kwargs", [
        {"max_chain": 0},
        {"max_docs": -1},
        {"max_cands": 1.5},
        {"cooc_threshold": 0},
        {"mask_pool_size": 0},
        {"seed": -3},
        {"answer_cap": 0},
        {"answer_cap": 1.5},
        {"split": ""},
        {"policy": "legal"},
        {"truncation": "sentence"},
    ])
    def test_invalid_values(self, kwargs):
        from hop_toolkit.config import PipelineConfig
        from hop_toolkit.exceptions import ConfigError

        with pytest.raises(ConfigError):
            PipelineConfig(**kwargs)

    def test_custom_policy_needs_rules(self, temp_dir):
        from hop_toolkit.config import PipelineConfig
        from hop_toolkit.exceptions import ConfigError

        with pytest.raises(ConfigError, match="rules_path"):
            PipelineConfig(policy="custom")
        config = PipelineConfig(policy="custom", rules_path=str(temp_dir / "rules.json"))
        assert config.rules_path == temp_dir / "rules.json"

    def test_test_split(self):
        from hop_toolkit.config import PipelineConfig

        assert not PipelineConfig(split="test").is_training_split

    def test_from_dict_unknown_keys(self):
        from hop_toolkit.config import PipelineConfig
        from hop_toolkit.exceptions import ConfigError

        with pytest.raises(ConfigError, match="hops"):
            PipelineConfig.from_dict({"hops": 2})

    def test_from_file(self, temp_dir):
        from hop_toolkit.config import PipelineConfig

        path = temp_dir / "config.json"
        path.write_text(json.dumps({"max_chain": 2, "policy": "biomedical"}), encoding="utf-8")
        config = PipelineConfig.from_file(path)
        assert config.max_chain == 2
        assert config.balance is True

    def test_from_file_errors(self, temp_dir):
        from hop_toolkit.config import PipelineConfig
        from hop_toolkit.exceptions import ConfigError

        broken = temp_dir / "broken.json"
        broken.write_text("{not json", encoding="utf-8")
        listed = temp_dir / "list.json"
        listed.write_text("[1, 2]", encoding="utf-8")
        with pytest.raises(ConfigError):
            PipelineConfig.from_file(broken)
        with pytest.raises(ConfigError, match="JSON object"):
            PipelineConfig.from_file(listed)
        with pytest.raises(ConfigError):
            PipelineConfig.from_file(temp_dir / "missing.json")

    def test_merged_ignores_none(self):
        from hop_toolkit.config import PipelineConfig

        merged = PipelineConfig(max_docs=10).merged({"max_docs": None, "seed": 4})
        assert merged.max_docs == 10
        assert merged.seed == 4

    def test_merged_policy_change_rederives_defaults(self):
        from hop_toolkit.config import PipelineConfig, TruncationPolicy

        merged = PipelineConfig().merged({"policy": "biomedical"})
        assert merged.truncation is TruncationPolicy.MAX_TOKENS
        assert merged.balance is True

    def test_merged_keeps_explicit_truncation(self):
        from hop_toolkit.config import PipelineConfig, TruncationPolicy

        config = PipelineConfig(truncation="none")
        merged = config.merged({"policy": "biomedical"})
        assert merged.truncation is TruncationPolicy.NONE

    def test_to_dict_round_trip(self):
        from hop_toolkit.config import PipelineConfig

        config = PipelineConfig(policy="biomedical", max_tokens=120, seed=9)
        data = config.to_dict()
        assert data["policy"] == "biomedical"
        assert data["truncation"] == "max_tokens"
        assert data["rules_path"] is None
        json.dumps(data)
        assert PipelineConfig.from_dict(data) == config
