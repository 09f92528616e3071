"""
Edge and truncation policy presets.
"""

from enum import Enum


class EdgePolicy(Enum):
    """Rule set deciding which entity-document edges exist."""

    ENCYCLOPEDIC = "encyclopedic"
    BIOMEDICAL = "biomedical"
    CUSTOM = "custom"

    @classmethod
    def from_string(cls, name: str) -> "EdgePolicy":
        """
        Create EdgePolicy from string name.

        Supported names:
            - 'encyclopedic', 'wiki' -> ENCYCLOPEDIC
            - 'biomedical', 'bio' -> BIOMEDICAL
            - 'custom' -> CUSTOM

        Args:
            name: Policy name (case-insensitive)

        Returns:
            EdgePolicy enum value

        Raises:
            ValueError: If name is not recognized
        """
        name_lower = name.lower()
        mapping = {
            "encyclopedic": cls.ENCYCLOPEDIC,
            "wiki": cls.ENCYCLOPEDIC,
            "biomedical": cls.BIOMEDICAL,
            "bio": cls.BIOMEDICAL,
            "custom": cls.CUSTOM,
        }

        if name_lower not in mapping:
            valid = ", ".join(mapping.keys())
            raise ValueError(f"Unknown edge policy '{name}'. Valid: {valid}")

        return mapping[name_lower]


class TruncationPolicy(Enum):
    """How document bodies are cut before graph construction."""

    FIRST_PARAGRAPH = "first_paragraph"
    MAX_TOKENS = "max_tokens"
    NONE = "none"

    @classmethod
    def from_string(cls, name: str) -> "TruncationPolicy":
        """
        Create TruncationPolicy from string name.

        Accepts 'first_paragraph' (or 'first-paragraph', 'paragraph'),
        'max_tokens' (or 'max-tokens', 'tokens') and 'none'.

        Raises:
            ValueError: If name is not recognized
        """
        name_lower = name.lower().replace("-", "_")
        mapping = {
            "first_paragraph": cls.FIRST_PARAGRAPH,
            "paragraph": cls.FIRST_PARAGRAPH,
            "max_tokens": cls.MAX_TOKENS,
            "tokens": cls.MAX_TOKENS,
            "none": cls.NONE,
        }

        if name_lower not in mapping:
            valid = ", ".join(mapping.keys())
            raise ValueError(f"Unknown truncation policy '{name}'. Valid: {valid}")

        return mapping[name_lower]

    @classmethod
    def default_for(cls, policy: EdgePolicy) -> "TruncationPolicy":
        """Truncation used by each edge policy when none is configured."""
        if policy is EdgePolicy.BIOMEDICAL:
            return cls.MAX_TOKENS
        return cls.FIRST_PARAGRAPH
