"""
Hop Toolkit - Multi-hop reading comprehension dataset induction.

Builds a bipartite entity-document graph from a knowledge base and a
corpus, traverses it to assemble query samples with type-consistent
candidates, and filters the result for dataset biases.
"""

from .config import EdgePolicy, PipelineConfig, TruncationPolicy
from .kbmodel import KnowledgeBase, Query, Triple, load_kb

__version__ = "0.1.0"

__all__ = [
    "EdgePolicy",
    "KnowledgeBase",
    "PipelineConfig",
    "Query",
    "Triple",
    "TruncationPolicy",
    "load_kb",
    "__version__",
]
