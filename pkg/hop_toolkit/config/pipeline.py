"""
Pipeline-level configuration.
"""

import json
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..exceptions import ConfigError
from .policies import EdgePolicy, TruncationPolicy


@dataclass
class PipelineConfig:
    """
    Configuration for one dataset induction run.

    Attributes:
        policy: Edge policy (enum or string like 'encyclopedic', 'biomedical')
        rules_path: JSON rule file for the custom edge policy
        max_chain: Maximum number of documents on a traversal chain (default: 3)
        max_docs: Maximum number of support documents per sample (default: 64)
        max_cands: Maximum number of candidates per sample (default: 100)
        cooc_threshold: Document-answer cooccurrence filter threshold (default: 20)
        answer_cap: Maximum share of any single answer (default: 0.001)
        mask_pool_size: Number of placeholder tokens (default: 100)
        seed: Global random seed
        split: Split label ('train', 'dev', 'test')
        truncation: Truncation policy; None picks the policy default
        max_tokens: Body token limit for MAX_TOKENS truncation (default: 300)
        keep_title: Keep the title when truncating by tokens
        case_sensitive: Case-sensitive mention matching
        drug_name_edges: Also connect documents mentioning a drug's own name
        balance: Path-balanced subsampling; None means "biomedical only"
    """

    policy: Union[EdgePolicy, str] = EdgePolicy.ENCYCLOPEDIC
    rules_path: Optional[Path] = None
    max_chain: int = 3
    max_docs: int = 64
    max_cands: int = 100
    cooc_threshold: int = 20
    answer_cap: float = 0.001
    mask_pool_size: int = 100
    seed: int = 0
    split: str = "train"
    truncation: Optional[Union[TruncationPolicy, str]] = None
    max_tokens: int = 300
    keep_title: bool = True
    case_sensitive: bool = False
    drug_name_edges: bool = False
    balance: Optional[bool] = None

    def __post_init__(self):
        """Convert strings to enums and check bounds."""
        try:
            if isinstance(self.policy, str):
                self.policy = EdgePolicy.from_string(self.policy)
            if self.truncation is None:
                self.truncation = TruncationPolicy.default_for(self.policy)
            elif isinstance(self.truncation, str):
                self.truncation = TruncationPolicy.from_string(self.truncation)
        except ValueError as e:
            raise ConfigError(str(e)) from e

        if isinstance(self.rules_path, str):
            self.rules_path = Path(self.rules_path)
        if self.balance is None:
            self.balance = self.policy is EdgePolicy.BIOMEDICAL

        for name in ("max_chain", "max_docs", "max_cands", "cooc_threshold",
                     "mask_pool_size", "max_tokens"):
            value = getattr(self, name)
            if not isinstance(value, int) or value <= 0:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigError(f"seed must be a non-negative integer, got {self.seed!r}")
        if not 0 < self.answer_cap <= 1:
            raise ConfigError(f"answer_cap must be in (0, 1], got {self.answer_cap!r}")
        if self.policy is EdgePolicy.CUSTOM and self.rules_path is None:
            raise ConfigError("custom edge policy requires rules_path")
        if not self.split:
            raise ConfigError("split label must not be empty")

    @property
    def is_training_split(self) -> bool:
        """True when candidate pools come from this split's own facts."""
        return self.split == "train"

    @classmethod
    def from_file(cls, path: Union[str, Path]) -> "PipelineConfig":
        """
        Load configuration from a JSON file.

        Raises:
            ConfigError: If the file is unreadable or has unknown keys
        """
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"Cannot read config file {path}: {e}") from e
        if not isinstance(data, dict):
            raise ConfigError(f"Config file {path} must hold a JSON object")
        return cls.from_dict(data)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PipelineConfig":
        """Create a config from a plain dict, rejecting unknown keys."""
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"Unknown config keys: {', '.join(unknown)}")
        return cls(**data)

    def merged(self, overrides: Dict[str, Any]) -> "PipelineConfig":
        """Return a new config with non-None overrides applied on top."""
        data = self.to_dict()
        overrides = {k: v for k, v in overrides.items() if v is not None}
        if "policy" in overrides:
            # Derived defaults follow the new policy unless set explicitly
            if self.truncation is TruncationPolicy.default_for(self.policy):
                data["truncation"] = None
            if self.balance == (self.policy is EdgePolicy.BIOMEDICAL):
                data["balance"] = None
        data.update(overrides)
        return PipelineConfig.from_dict(data)

    def to_dict(self) -> Dict[str, Any]:
        """Plain JSON-compatible representation."""
        data = asdict(self)
        data["policy"] = self.policy.value
        data["truncation"] = self.truncation.value
        data["rules_path"] = str(self.rules_path) if self.rules_path else None
        return data
