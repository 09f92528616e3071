"""Synthetic fixtures and reference oracles."""

from .fixtures import (
    CUE_ENTITY,
    Fixture,
    FixtureSpec,
    PlantedChain,
    generate_fixture,
    random_small_graph,
    write_fixture,
)
from .oracle import MAX_ORACLE_DOCS, brute_force_paths

__all__ = [
    "CUE_ENTITY",
    "Fixture",
    "FixtureSpec",
    "MAX_ORACLE_DOCS",
    "PlantedChain",
    "brute_force_paths",
    "generate_fixture",
    "random_small_graph",
    "write_fixture",
]
