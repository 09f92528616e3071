"""
Configuration module for hop_toolkit.
"""

from .policies import EdgePolicy, TruncationPolicy
from .pipeline import PipelineConfig

__all__ = [
    "EdgePolicy",
    "TruncationPolicy",
    "PipelineConfig",
]
