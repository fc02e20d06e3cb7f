"""Top-level strong list colorer: classify each component and dispatch to its handler"""
from dataclasses import replace
from typing import Dict, List, Optional, Type

from strongce.config import get_settings
from strongce.core.coloring import ListAssignment, verify_strong
from strongce.core.graph import MultiGraph
from strongce.engine.base import BaseHandler, ColoringOutcome, StructureKind
from strongce.engine.classifier import classify
from strongce.engine.fallback import fallback_backtrack
from strongce.engine.five_cycle import FiveCycleHandler
from strongce.engine.four_cycle import FourCycleHandler
from strongce.engine.girth_six import RegularGirthSixHandler
from strongce.engine.low_degree import LowDegreeHandler
from strongce.engine.nonsimple import LoopHandler, ParallelHandler
from strongce.engine.triangle import TriangleHandler
from strongce.errors import DegreeTooLargeError, GuaranteeViolation, PreconditionError
from strongce.utils.logger import get_logger

logger = get_logger("engine")

HANDLERS: Dict[StructureKind, Type[BaseHandler]] = {
    StructureKind.LOW_DEGREE: LowDegreeHandler,
    StructureKind.LOOP: LoopHandler,
    StructureKind.PARALLEL: ParallelHandler,
    StructureKind.CYCLE3: TriangleHandler,
    StructureKind.CYCLE4: FourCycleHandler,
    StructureKind.CYCLE5: FiveCycleHandler,
    StructureKind.REGULAR_GIRTH6: RegularGirthSixHandler,
}


def _color_component(graph: MultiGraph, lists: ListAssignment, allow_short: bool,
                     seed: Optional[int]) -> ColoringOutcome:
    if allow_short:
        return fallback_backtrack(graph, lists, None, list(range(graph.edge_count)), seed=seed)
    structure = classify(graph)
    return HANDLERS[structure.kind]().execute(graph, lists, structure, seed)


def strong_list_color(graph: MultiGraph, lists: ListAssignment, allow_short: bool = False,
                      seed: Optional[int] = None) -> ColoringOutcome:
    """Strong coloring of `graph` from `lists`, component by component.

    Lists must hold at least `list_size` colors (22 by default) and are cut to
    that length. With `allow_short` shorter lists are accepted and every
    component goes straight to the backtracking fallback. `seed` drives the
    fallback's randomized restarts; STRONGCE_SEED wins when set.
    """
    settings = get_settings()
    lists.check_graph(graph)
    if graph.edge_count == 0:
        return ColoringOutcome([], [])
    if graph.max_degree() > 4:
        raise DegreeTooLargeError(f"maximum degree {graph.max_degree()} exceeds 4")
    if not allow_short:
        if lists.min_size() < settings.list_size:
            raise PreconditionError(
                f"every list needs at least {settings.list_size} colors, the shortest has {lists.min_size()}"
            )
        working = lists.truncated(settings.list_size)
    else:
        working = lists

    colors: List[Optional[int]] = [None] * graph.edge_count
    merged = ColoringOutcome([], [])
    for component in graph.components():
        if component.graph.edge_count == 0:
            continue
        outcome = _color_component(component.graph, working.restricted(component.edge_map), allow_short, seed)
        for local, color in enumerate(outcome.coloring):
            colors[component.edge_map[local]] = color
        logger.info(
            f"component at vertex {component.vertex_map[0]} ({component.graph.edge_count} edges): "
            f"handler {outcome.handler}, fallback depth {outcome.fallback_depth}"
        )
        merged.handlers.extend(outcome.handlers)
        merged.fallback_depth = max(merged.fallback_depth, outcome.fallback_depth)
        edge_map = component.edge_map
        merged.trace.extend(
            replace(step, edge=edge_map[step.edge]) if step.edge is not None else step for step in outcome.trace
        )
        merged.bound_checks.extend(replace(check, edge=edge_map[check.edge]) for check in outcome.bound_checks)

    report = verify_strong(graph, lists, colors)
    if not report.ok:
        raise GuaranteeViolation(f"merged coloring is not strong: {report.describe()}")
    merged.coloring = list(colors)
    return merged
