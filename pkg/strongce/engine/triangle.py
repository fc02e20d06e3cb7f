"""Handler for a 3-cycle"""
from strongce.core.coloring import ListAssignment
from strongce.core.graph import Cycle, MultiGraph
from strongce.engine.base import BaseHandler, ColoringOutcome, HandlerContext, StructureClass, StructureKind
from strongce.services.ordering import BOUND_ALL_BUT_CORE, color_all_but_cycle


class TriangleHandler(BaseHandler):
    """Everything off the triangle first; each triangle edge then keeps 4 colors"""

    kind = StructureKind.CYCLE3
    name = "triangle"

    def color(self, ctx: HandlerContext) -> None:
        cycle = ctx.structure.cycle
        result = color_all_but_cycle(ctx.graph, ctx.lists, cycle)
        ctx.apply_greedy(result, "compatible order", BOUND_ALL_BUT_CORE)
        for edge in cycle.edges:
            ctx.check_available("triangle edge", edge, 4)
        ctx.finish_smallest_first(cycle.edges, "triangle edge")


def handle_3cycle(graph: MultiGraph, lists: ListAssignment, cycle: Cycle) -> ColoringOutcome:
    return TriangleHandler().execute(graph, lists, StructureClass(StructureKind.CYCLE3, cycle=cycle))
