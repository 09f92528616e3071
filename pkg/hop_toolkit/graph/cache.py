"""
Binary graph cache.

Graphs are pickled. Only load cache files this toolkit wrote itself.
"""

import hashlib
import logging
import pickle
from pathlib import Path
from typing import Optional, Union

from ..config.pipeline import PipelineConfig
from ..exceptions import GraphBuildError
from ..utils.jsonio import canonical_dumps
from .bipartite import BipartiteGraph

logger = logging.getLogger(__name__)

_CHUNK = 1 << 20


def file_digest(path: Union[str, Path]) -> str:
    """sha256 hex digest of a file's bytes."""
    h = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(_CHUNK), b""):
            h.update(chunk)
    return h.hexdigest()


def save_graph(graph: BipartiteGraph, path: Union[str, Path]) -> Path:
    """Pickle a graph to ``path``."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "wb") as f:
        pickle.dump(graph, f, protocol=pickle.HIGHEST_PROTOCOL)
    return path


def load_graph(path: Union[str, Path]) -> BipartiteGraph:
    """
    Read a pickled graph.

    Raises:
        GraphBuildError: If the file does not hold a BipartiteGraph
    """
    try:
        with open(path, "rb") as f:
            graph = pickle.load(f)
    except (pickle.UnpicklingError, EOFError, AttributeError, ImportError) as e:
        raise GraphBuildError(f"Cannot read graph file {path}: {e}") from e
    if not isinstance(graph, BipartiteGraph):
        raise GraphBuildError(f"{path} does not contain a bipartite graph")
    return graph


class GraphCache:
    """
    Directory of built graphs addressed by their inputs.

    The key covers the KB and corpus file contents, the rule file of a
    custom policy, and every config field that changes edges.
    """

    def __init__(self, base_dir: Path = Path("./graph_cache")):
        self.base_dir = Path(base_dir)
        self.base_dir.mkdir(parents=True, exist_ok=True)

    def generate_key(
        self,
        kb_path: Union[str, Path],
        corpus_path: Union[str, Path],
        config: PipelineConfig,
    ) -> str:
        """16-character hex key of the graph inputs."""
        inputs = {
            "kb": file_digest(kb_path),
            "corpus": file_digest(corpus_path),
            "policy": config.policy.value,
            "rules": file_digest(config.rules_path) if config.rules_path else None,
            "truncation": config.truncation.value,
            "max_tokens": config.max_tokens,
            "keep_title": config.keep_title,
            "case_sensitive": config.case_sensitive,
            "drug_name_edges": config.drug_name_edges,
        }
        return hashlib.sha256(canonical_dumps(inputs).encode("utf-8")).hexdigest()[:16]

    def get_path(self, key: str) -> Path:
        return self.base_dir / f"graph_{key}.pkl"

    def load(self, key: str) -> Optional[BipartiteGraph]:
        """Cached graph, or None on a miss."""
        path = self.get_path(key)
        if not path.exists():
            return None
        logger.debug("Graph cache hit %s", path)
        return load_graph(path)

    def save(self, key: str, graph: BipartiteGraph) -> Path:
        return save_graph(graph, self.get_path(key))
