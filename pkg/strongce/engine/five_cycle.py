"""Handler for a 5-cycle when the graph has no shorter cycles"""
from itertools import product
from typing import List, Optional, Tuple

from strongce.core.coloring import ListAssignment
from strongce.core.graph import Cycle, MultiGraph
from strongce.engine.base import BaseHandler, ColoringOutcome, HandlerContext, StructureClass, StructureKind
from strongce.errors import HandlerStuck, PreconditionError
from strongce.services.nullstellensatz import (
    FIVE_CYCLE_FACTORS,
    FIVE_CYCLE_TARGET,
    ConflictSystem,
    cn_find_assignment,
    five_cycle_certificate,
)
from strongce.services.ordering import BOUND_ALL_BUT_CORE, color_all_but_cycle

# Lower bounds on |L'| of the nine variables after the pendants are erased
VARIABLE_FLOORS = (5, 5, 6, 5, 5, 3, 4, 4, 3)


def label_five_cycle(graph: MultiGraph, cycle: Cycle) -> Optional[Tuple[int, ...]]:
    """Nine edges (five cycle edges, four pendants) whose conflicts all lie on factor pairs.

    Walks the cycle from every start in both directions as u0..u4; variable i
    < 5 is the edge u_i u_{i+1}, variable 5 + k a pendant at u_{k+1}.
    """
    if len(cycle) != 5:
        raise PreconditionError(f"expected a 5-cycle, got length {len(cycle)}")
    allowed = {frozenset(pair) for pair in FIVE_CYCLE_FACTORS}
    on_cycle = set(cycle.edges)
    between = {}
    for e in cycle.edges:
        between[frozenset(graph.endpoints(e))] = e

    for start in range(5):
        for step in (1, -1):
            walk = [cycle.vertices[(start + step * k) % 5] for k in range(5)]
            ring = [between[frozenset((walk[k], walk[(k + 1) % 5]))] for k in range(5)]
            options = [[e for e in graph.incident_edges(walk[k]) if e not in on_cycle] for k in range(1, 5)]
            for pendants in product(*options):
                edges = ring + list(pendants)
                if len(set(edges)) != 9:
                    continue
                if all(
                    frozenset((i, j)) in allowed
                    for i in range(9) for j in range(i + 1, 9)
                    if edges[j] in graph.neighborhood(edges[i])
                ):
                    return tuple(edges)
    return None


class FiveCycleHandler(BaseHandler):
    """Greedy off the cycle, erase four pendants, then solve the nine edges by certificate"""

    kind = StructureKind.CYCLE5
    name = "five_cycle"

    def color(self, ctx: HandlerContext) -> None:
        cycle = ctx.structure.cycle
        labels = label_five_cycle(ctx.graph, cycle)
        if labels is None:
            raise HandlerStuck("no pendant choice keeps the conflicts inside the factor pairs")
        ctx.record(f"variables mapped to edges {list(labels)}")

        result = color_all_but_cycle(ctx.graph, ctx.lists, cycle)
        ctx.apply_greedy(result, "compatible order", BOUND_ALL_BUT_CORE)
        for edge in labels[5:]:
            ctx.coloring.unassign(edge)
            ctx.record("erase pendant", edge)
        for edge, floor in zip(labels, VARIABLE_FLOORS):
            ctx.check_available("variable list", edge, floor)

        lists: List[Tuple[int, ...]] = [ctx.coloring.available_colors(e) for e in labels]
        system = ConflictSystem(9, FIVE_CYCLE_FACTORS, tuple(lists), FIVE_CYCLE_TARGET)
        if not system.sizes_suffice():
            raise HandlerStuck(f"lists too short for the certificate: {[len(s) for s in lists]}")
        coefficient = five_cycle_certificate()
        ctx.record(f"certificate coefficient {coefficient}")

        values = cn_find_assignment(system)
        if values is None:
            raise HandlerStuck("certificate search found no assignment")
        for edge, color in zip(labels, values):
            ctx.assign(edge, color, "certified color")


def handle_5cycle(graph: MultiGraph, lists: ListAssignment, cycle: Cycle) -> ColoringOutcome:
    return FiveCycleHandler().execute(graph, lists, StructureClass(StructureKind.CYCLE5, cycle=cycle))
