import os
import sys

import numpy as np
import pytest

# Add project root to Python path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from strongce.config import reset_settings
from strongce.core.coloring import ListAssignment
from strongce.core.graph import MultiGraph

ENV_VARS = (
    "STRONGCE_SEED",
    "STRONGCE_LOG_LEVEL",
    "STRONGCE_LOG_FILE",
    "STRONGCE_NODE_LIMIT",
    "STRONGCE_TIME_LIMIT",
    "STRONGCE_FALLBACK_RESTARTS",
    "STRONGCE_DEBUG_CHECKS",
    "STRONGCE_LIST_SIZE",
)


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def cycle_graph(n: int) -> MultiGraph:
    return MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(edge_count: int) -> MultiGraph:
    return MultiGraph(edge_count + 1, [(i, i + 1) for i in range(edge_count)])


def star_graph(leaves: int) -> MultiGraph:
    return MultiGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def random_lists_for(graph: MultiGraph, rng, k: int = 22, palette: int = 66) -> ListAssignment:
    return ListAssignment(
        sorted(int(c) + 1 for c in rng.choice(palette, size=k, replace=False)) for _ in range(graph.edge_count)
    )
