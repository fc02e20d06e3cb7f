"""Handler for a vertex of degree at most 3"""
from strongce.core.coloring import ListAssignment
from strongce.core.graph import MultiGraph
from strongce.engine.base import BaseHandler, ColoringOutcome, HandlerContext, StructureClass, StructureKind
from strongce.errors import PreconditionError
from strongce.services.ordering import BOUND_ALL_BUT_CORE, color_all_but_vertex


class LowDegreeHandler(BaseHandler):
    """Greedy around v, then v's own edges.

    With d(v) <= 3 an edge at v sees at most 20 edges, two of them at v, so
    the k-th edge colored at v has at most 17 + k colored neighbors.
    """

    kind = StructureKind.LOW_DEGREE
    name = "low_degree"

    def color(self, ctx: HandlerContext) -> None:
        v = ctx.structure.vertex
        if ctx.graph.degree(v) > 3:
            raise PreconditionError(f"vertex {v} has degree {ctx.graph.degree(v)}, expected at most 3")
        result = color_all_but_vertex(ctx.graph, ctx.lists, v)
        ctx.apply_greedy(result, "compatible order", BOUND_ALL_BUT_CORE)

        pending = list(ctx.graph.incident_edges(v))
        step = 1
        while pending:
            edge = min(pending, key=lambda e: (len(ctx.coloring.available_colors(e)), e))
            ctx.check_colored_neighbors(f"edge {step} at v", edge, 17 + step)
            ctx.color_first_available(edge, f"edge {step} at v")
            pending.remove(edge)
            step += 1


def handle_low_degree(graph: MultiGraph, lists: ListAssignment, v: int) -> ColoringOutcome:
    return LowDegreeHandler().execute(graph, lists, StructureClass(StructureKind.LOW_DEGREE, vertex=v))
