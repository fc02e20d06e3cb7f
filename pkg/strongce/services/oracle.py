"""Exact small-instance solvers: list colorability and the strong chromatic index"""
import time
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence

import networkx as nx

from strongce.config import get_settings
from strongce.core.coloring import ListAssignment, PartialColoring
from strongce.core.graph import ConflictGraph, MultiGraph
from strongce.errors import LimitExceeded, PreconditionError
from strongce.utils.logger import get_logger

logger = get_logger("oracle")

HEURISTICS = ("dsatur", "static")


@dataclass
class SearchConfig:
    """Limits and variable ordering for the exact searches"""
    node_limit: int = 2_000_000
    time_limit: float = 60.0
    heuristic: str = "dsatur"

    def __post_init__(self):
        if self.node_limit <= 0 or self.time_limit <= 0:
            raise PreconditionError("search limits must be positive")
        if self.heuristic not in HEURISTICS:
            raise PreconditionError(f"unknown heuristic {self.heuristic!r}, expected one of {HEURISTICS}")

    @classmethod
    def from_settings(cls, heuristic: str = "dsatur") -> "SearchConfig":
        settings = get_settings()
        return cls(settings.node_limit, settings.time_limit, heuristic)


class _Search:
    """Backtracking with forward checking over a set of edges with color domains"""

    def __init__(self, adjacency: Mapping[int, Sequence[int]], domains: Mapping[int, Sequence[int]],
                 config: SearchConfig, interchangeable: bool = False):
        self.adjacency = {e: [f for f in adjacency[e] if f in domains] for e in domains}
        self.domains: Dict[int, List[int]] = {e: list(d) for e, d in domains.items()}
        self.config = config
        self.interchangeable = interchangeable
        self.assignment: Dict[int, int] = {}
        self.uncolored = set(domains)
        self.nodes = 0
        self._deadline = time.monotonic() + config.time_limit
        self._max_used = -1

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.config.node_limit:
            raise LimitExceeded(f"node limit {self.config.node_limit} reached")
        if self.nodes % 1024 == 0 and time.monotonic() > self._deadline:
            raise LimitExceeded(f"time limit {self.config.time_limit}s reached")

    def _select(self) -> int:
        if self.config.heuristic == "static":
            return min(self.uncolored)
        return min(
            self.uncolored,
            key=lambda e: (len(self.domains[e]), -sum(1 for f in self.adjacency[e] if f in self.uncolored), e),
        )

    def _values(self, e: int) -> List[int]:
        if self.interchangeable:
            # unused colors are symmetric, so only the next fresh one is tried
            return [c for c in self.domains[e] if c <= self._max_used + 1]
        return list(self.domains[e])

    def _forward(self, e: int, color: int) -> Optional[List[int]]:
        pruned = []
        for f in self.adjacency[e]:
            if f in self.uncolored and color in self.domains[f]:
                self.domains[f].remove(color)
                pruned.append(f)
                if not self.domains[f]:
                    self._restore(pruned, color)
                    return None
        return pruned

    def _restore(self, pruned: List[int], color: int) -> None:
        for f in pruned:
            self.domains[f].append(color)
            self.domains[f].sort()

    def solve(self) -> bool:
        if not self.uncolored:
            return True
        self._tick()
        e = self._select()
        self.uncolored.discard(e)
        for color in self._values(e):
            pruned = self._forward(e, color)
            if pruned is None:
                continue
            self.assignment[e] = color
            previous = self._max_used
            self._max_used = max(previous, color)
            if self.solve():
                return True
            self._max_used = previous
            del self.assignment[e]
            self._restore(pruned, color)
        self.uncolored.add(e)
        return False


def _adjacency(conflicts: ConflictGraph) -> Dict[int, List[int]]:
    return {e: sorted(conflicts.adjacency[e]) for e in range(conflicts.edge_count)}


def list_colorable(graph: MultiGraph, lists: ListAssignment, config: Optional[SearchConfig] = None) -> Optional[List[int]]:
    """A strong coloring from the lists, or None when none exists"""
    lists.check_graph(graph)
    config = config or SearchConfig.from_settings()
    domains = {e: sorted(lists[e]) for e in range(graph.edge_count)}
    search = _Search(_adjacency(graph.conflict_graph()), domains, config)
    found = search.solve()
    logger.debug(f"list search visited {search.nodes} nodes")
    if not found:
        return None
    return [search.assignment[e] for e in range(graph.edge_count)]


def extend_coloring(coloring: PartialColoring, edges: Sequence[int],
                    config: Optional[SearchConfig] = None) -> Optional[Dict[int, int]]:
    """Exact completion of `edges` on top of a partial coloring, from their available colors"""
    config = config or SearchConfig.from_settings()
    graph = coloring.graph
    domains = {e: sorted(coloring.available_colors(e)) for e in edges}
    if any(not d for d in domains.values()):
        return None
    adjacency = {e: sorted(graph.neighborhood(e)) for e in edges}
    search = _Search(adjacency, domains, config)
    if not search.solve():
        return None
    return dict(search.assignment)


def _k_colorable(conflicts: ConflictGraph, k: int, config: SearchConfig) -> Optional[List[int]]:
    if conflicts.edge_count == 0:
        return []
    if k <= 0:
        return None
    domains = {e: list(range(k)) for e in range(conflicts.edge_count)}
    search = _Search(_adjacency(conflicts), domains, config, interchangeable=True)
    if not search.solve():
        return None
    return [search.assignment[e] + 1 for e in range(conflicts.edge_count)]


def is_strongly_k_colorable(graph: MultiGraph, k: int, config: Optional[SearchConfig] = None) -> bool:
    """Uniform lists {1..k}"""
    return _k_colorable(graph.conflict_graph(), k, config or SearchConfig.from_settings()) is not None


def exact_strong_chromatic_index(graph: MultiGraph, config: Optional[SearchConfig] = None) -> int:
    """Smallest k with a strong k-coloring, between a clique bound and a DSATUR bound"""
    config = config or SearchConfig.from_settings()
    conflicts = graph.conflict_graph()
    if conflicts.edge_count == 0:
        return 0
    conflict_nx = conflicts.to_networkx()
    lower = max(len(clique) for clique in nx.find_cliques(conflict_nx))
    greedy = nx.greedy_color(conflict_nx, strategy="saturation_largest_first")
    upper = max(greedy.values()) + 1
    logger.debug(f"strong chromatic index bounds [{lower}, {upper}]")
    for k in range(lower, upper):
        if _k_colorable(conflicts, k, config) is not None:
            return k
    return upper


def enumerate_strong_chromatic_index(graph: MultiGraph, max_edges: int = 16) -> int:
    """Plain edge-order backtracking without heuristics; a check on the main solver"""
    m = graph.edge_count
    if m > max_edges:
        raise PreconditionError(f"plain enumeration is limited to {max_edges} edges")
    neighbors = [sorted(graph.neighborhood(e)) for e in range(m)]

    def fits(k: int) -> bool:
        colors = [0] * m

        def place(e: int) -> bool:
            if e == m:
                return True
            used = {colors[f] for f in neighbors[e] if f < e}
            fresh = max(colors[:e], default=0) + 1
            for c in range(1, min(k, fresh) + 1):
                if c not in used:
                    colors[e] = c
                    if place(e + 1):
                        return True
            colors[e] = 0
            return False

        return place(0)

    k = 0
    while not fits(k):
        k += 1
    return k
