"""Backtracking safety net behind the structure handlers"""
from typing import List, Optional, Sequence

import numpy as np

from strongce.config import get_settings
from strongce.core.coloring import ListAssignment, PartialColoring
from strongce.core.graph import MultiGraph
from strongce.engine.base import ColoringOutcome, TraceStep
from strongce.errors import FallbackExhausted, LimitExceeded
from strongce.services.oracle import SearchConfig, extend_coloring, list_colorable
from strongce.services.ordering import compatible_order_vertex, greedy_color
from strongce.utils.logger import get_logger

logger = get_logger("fallback")

LOCAL = 1
GLOBAL = 2


def fallback_backtrack(graph: MultiGraph, lists: ListAssignment, partial: Optional[PartialColoring],
                       uncolored: Sequence[int], config: Optional[SearchConfig] = None,
                       restarts: Optional[int] = None, seed: Optional[int] = None) -> ColoringOutcome:
    """Finish `uncolored` exactly on top of `partial`; else start over globally.

    Depth 1 is the local completion. Depth 2 erases everything and tries
    randomized compatible orders, then an exact search over the whole graph.
    """
    settings = get_settings()
    config = config or SearchConfig.from_settings()
    restarts = settings.fallback_restarts if restarts is None else restarts
    partial = partial if partial is not None else PartialColoring(graph, lists)
    trace: List[TraceStep] = []

    try:
        local = extend_coloring(partial, uncolored, config)
    except LimitExceeded as exc:
        logger.warning(f"local backtracking gave up: {exc}")
        local = None
    if local is not None:
        done = partial.copy()
        for edge in sorted(local):
            done.assign(edge, local[edge])
        trace.append(TraceStep("fallback", f"local backtracking colored {len(local)} edges"))
        logger.warning(f"fallback depth {LOCAL}: {len(local)} edges completed locally")
        return ColoringOutcome.success_response(done.as_list(), "fallback", LOCAL, trace, [])

    trace.append(TraceStep("fallback", "local backtracking failed; restarting globally"))
    rng = np.random.default_rng(settings.resolve_seed(seed))
    centers = [v for v in range(graph.vertex_count) if graph.degree(v) > 0]
    for attempt in range(restarts if centers else 0):
        v = centers[int(rng.integers(len(centers)))]
        order = list(compatible_order_vertex(graph, v, rng)) + list(graph.incident_edges(v))
        result = greedy_color(graph, lists, order, label=f"restart {attempt}")
        if result.success:
            trace.append(TraceStep("fallback", f"randomized restart {attempt} succeeded around vertex {v}"))
            logger.warning(f"fallback depth {GLOBAL}: randomized restart {attempt} succeeded")
            return ColoringOutcome.success_response(result.coloring.as_list(), "fallback", GLOBAL, trace, [])

    try:
        exact = list_colorable(graph, lists, config)
    except LimitExceeded as exc:
        logger.error(f"global backtracking gave up: {exc}")
        exact = None
    if exact is not None:
        trace.append(TraceStep("fallback", "exact global search succeeded"))
        logger.warning(f"fallback depth {GLOBAL}: exact search succeeded")
        return ColoringOutcome.success_response(exact, "fallback", GLOBAL, trace, [])

    trace.append(TraceStep("fallback", "exhausted"))
    logger.error("fallback exhausted: no strong coloring found")
    raise FallbackExhausted("no strong list coloring found by local or global backtracking", trace)
