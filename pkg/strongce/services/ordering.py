"""Compatible edge orderings and greedy coloring around a vertex or a cycle"""
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from strongce.core.coloring import ListAssignment, PartialColoring
from strongce.core.graph import Cycle, Distance, MultiGraph
from strongce.errors import ColorConflictError, DegreeTooLargeError, GuaranteeViolation, PreconditionError
from strongce.utils.logger import get_logger

logger = get_logger("ordering")

# Colored-neighbor ceilings from the counting arguments
BOUND_ALL_BUT_CORE = 20
BOUND_WITH_PRECOLORED = 21


@dataclass(frozen=True)
class CompatibleOrder:
    """Edges off the core, farthest from the center first"""
    center: Tuple[int, ...]
    excluded: FrozenSet[int]
    edges: Tuple[int, ...]
    distance_class: Mapping[int, Distance]

    def __iter__(self):
        return iter(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def without(self, edges: Iterable[int]) -> "CompatibleOrder":
        drop = set(edges)
        return CompatibleOrder(
            self.center,
            self.excluded | frozenset(drop),
            tuple(e for e in self.edges if e not in drop),
            {e: d for e, d in self.distance_class.items() if e not in drop},
        )


@dataclass
class GreedyResult:
    """Outcome of a greedy pass; on failure names the stuck edge"""
    success: bool
    coloring: PartialColoring
    stuck_edge: Optional[int] = None
    stuck_available: Tuple[int, ...] = ()
    neighborhood_sizes: Dict[int, int] = field(default_factory=dict)

    @classmethod
    def success_response(cls, coloring: PartialColoring, sizes: Dict[int, int]) -> "GreedyResult":
        return cls(success=True, coloring=coloring, neighborhood_sizes=sizes)

    @classmethod
    def error_response(cls, coloring: PartialColoring, edge: int, available: Tuple[int, ...],
                       sizes: Dict[int, int]) -> "GreedyResult":
        return cls(success=False, coloring=coloring, stuck_edge=edge, stuck_available=available,
                   neighborhood_sizes=sizes)

    @property
    def peak_colored_neighbors(self) -> int:
        return max(self.neighborhood_sizes.values(), default=0)


def _order_from_distances(graph: MultiGraph, center: Tuple[int, ...], excluded: FrozenSet[int],
                          rng: Optional[np.random.Generator]) -> CompatibleOrder:
    dist = graph.vertex_distances(center)
    classes = {e: min(dist[u], dist[v]) for e, (u, v) in enumerate(graph.edges) if e not in excluded}
    if rng is None:
        tie = {e: e for e in classes}
    else:
        perm = rng.permutation(graph.edge_count)
        tie = {e: int(perm[e]) for e in classes}
    ordered = sorted(classes, key=lambda e: (-classes[e], tie[e]))
    return CompatibleOrder(center, excluded, tuple(ordered), classes)


def compatible_order_vertex(graph: MultiGraph, v: int, rng: Optional[np.random.Generator] = None) -> CompatibleOrder:
    """All edges not at v, by descending distance from v; ties by edge id unless rng shuffles them"""
    return _order_from_distances(graph, (v,), frozenset(graph.incident_edges(v)), rng)


def compatible_order_cycle(graph: MultiGraph, cycle: Cycle, rng: Optional[np.random.Generator] = None) -> CompatibleOrder:
    """All edges off the cycle, by descending distance from its vertex set"""
    return _order_from_distances(graph, tuple(sorted(set(cycle.vertices))), frozenset(cycle.edges), rng)


def greedy_color(graph: MultiGraph, lists: ListAssignment, order: Iterable[int],
                 pre_colored: Optional[PartialColoring] = None, bound: Optional[int] = None,
                 label: str = "greedy") -> GreedyResult:
    """First-available greedy over `order`; the input coloring is not modified.

    With a bound, an edge that already sees more than `bound` colored
    neighbors raises GuaranteeViolation.
    """
    coloring = pre_colored.copy() if pre_colored is not None else PartialColoring(graph, lists)
    sizes: Dict[int, int] = {}
    for e in order:
        observed = coloring.colored_neighborhood_size(e)
        sizes[e] = observed
        if bound is not None and observed > bound:
            logger.error(f"{label}: edge {e} sees {observed} colored neighbors, bound {bound}")
            raise GuaranteeViolation(f"{label}: edge {e} has {observed} colored neighbors, bound is {bound}")
        available = coloring.available_colors(e)
        if not available:
            logger.debug(f"{label}: stuck at edge {e}")
            return GreedyResult.error_response(coloring, e, available, sizes)
        coloring.assign(e, available[0])
    return GreedyResult.success_response(coloring, sizes)


def _check_core_preconditions(graph: MultiGraph, lists: ListAssignment, min_list: int) -> None:
    lists.check_graph(graph)
    if graph.vertex_count and graph.max_degree() > 4:
        raise DegreeTooLargeError(f"maximum degree {graph.max_degree()} exceeds 4")
    if lists.min_size() < min_list and graph.edge_count:
        raise PreconditionError(f"every list needs at least {min_list} colors, smallest has {lists.min_size()}")
    if not graph.is_connected():
        raise PreconditionError("greedy completion around a core needs a connected graph")


def _run_guaranteed(graph: MultiGraph, lists: ListAssignment, order: Sequence[int],
                    pre_colored: Optional[PartialColoring], bound: int, label: str) -> GreedyResult:
    result = greedy_color(graph, lists, order, pre_colored, bound=bound, label=label)
    if not result.success:
        raise GuaranteeViolation(f"{label}: edge {result.stuck_edge} has no available color")
    logger.debug(f"{label}: colored {len(order)} edges, peak |N'| {result.peak_colored_neighbors}")
    return result


def color_all_but_vertex(graph: MultiGraph, lists: ListAssignment, v: int,
                         pre_colored: Optional[PartialColoring] = None) -> GreedyResult:
    """Color every edge not incident to v; needs Δ <= 4 and lists of 21 or more"""
    _check_core_preconditions(graph, lists, 21)
    order = compatible_order_vertex(graph, v)
    if pre_colored is not None:
        order = order.without(pre_colored.colored_edges())
    return _run_guaranteed(graph, lists, order.edges, pre_colored, BOUND_ALL_BUT_CORE, f"all-but-vertex({v})")


def color_all_but_cycle(graph: MultiGraph, lists: ListAssignment, cycle: Cycle,
                        pre_colored: Optional[PartialColoring] = None,
                        extra_uncolored: Iterable[int] = ()) -> GreedyResult:
    """Color every edge off the cycle (and off `extra_uncolored`); needs |C| >= 3"""
    if len(cycle) < 3:
        raise PreconditionError(f"cycle must have length at least 3, got {len(cycle)}")
    _check_core_preconditions(graph, lists, 21)
    order = compatible_order_cycle(graph, cycle).without(extra_uncolored)
    if pre_colored is not None:
        order = order.without(pre_colored.colored_edges())
    return _run_guaranteed(graph, lists, order.edges, pre_colored, BOUND_ALL_BUT_CORE, f"all-but-cycle({len(cycle)})")


def pendant_sets(graph: MultiGraph, v: int) -> List[Tuple[int, Tuple[int, ...]]]:
    """(e_i, A_i) for the edges at v: A_i holds the other edges at the far end of e_i"""
    sets = []
    for e in graph.incident_edges(v):
        u = graph.other_end(e, v)
        sets.append((e, tuple(f for f in graph.incident_edges(u) if f != e)))
    return sets


def color_with_precolored(graph: MultiGraph, lists: ListAssignment, v: int,
                          precolored: Mapping[int, int]) -> GreedyResult:
    """Color everything off v around one precolored edge in each A_i"""
    lists.check_graph(graph)
    if graph.max_degree() != 4 or graph.degree(v) != 4:
        raise PreconditionError("precolored completion needs maximum degree 4 and a degree-4 center")
    if not graph.is_simple():
        raise PreconditionError("precolored completion needs a simple graph")
    girth, _ = graph.girth_and_witness()
    if girth < 6:
        raise PreconditionError(f"precolored completion needs girth at least 6, got {girth}")
    if lists.min_size() < 22:
        raise PreconditionError(f"every list needs at least 22 colors, smallest has {lists.min_size()}")
    if not graph.is_connected():
        raise PreconditionError("precolored completion needs a connected graph")

    sets = pendant_sets(graph, v)
    for e, a_set in sets:
        hits = [f for f in a_set if f in precolored]
        if len(hits) != 1:
            raise PreconditionError(f"exactly one precolored edge is required among {list(a_set)}, got {len(hits)}")
    members = {f for _, a_set in sets for f in a_set}
    if set(precolored) - members:
        raise PreconditionError(f"precolored edges {sorted(set(precolored) - members)} are outside every A_i")

    coloring = PartialColoring(graph, lists)
    for f in sorted(precolored):
        try:
            coloring.assign(f, precolored[f])
        except ColorConflictError as exc:
            raise PreconditionError(f"invalid precoloring: {exc}") from exc

    order = compatible_order_vertex(graph, v).without(precolored)
    return _run_guaranteed(graph, lists, order.edges, coloring, BOUND_WITH_PRECOLORED, f"precolored({v})")
