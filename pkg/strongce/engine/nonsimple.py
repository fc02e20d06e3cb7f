"""Handlers for loops and parallel edges"""
from typing import List, Sequence

from strongce.core.coloring import ListAssignment
from strongce.core.graph import MultiGraph
from strongce.engine.base import BaseHandler, ColoringOutcome, HandlerContext, StructureClass, StructureKind
from strongce.errors import PreconditionError
from strongce.services.ordering import BOUND_ALL_BUT_CORE, color_all_but_vertex

# |N'| ceilings for v's edges in finishing order
LOOP_BOUNDS = (8, 16, 17)
PARALLEL_BOUNDS = (17, 18, 16, 17)


class _CenterFinisher(BaseHandler):
    """Greedy around a center vertex, then its edges in a fixed order"""

    bounds: Sequence[int] = ()

    def finishing_order(self, ctx: HandlerContext) -> List[int]:
        raise NotImplementedError("Subclass must implement finishing_order()")

    def color(self, ctx: HandlerContext) -> None:
        v = ctx.structure.vertex
        result = color_all_but_vertex(ctx.graph, ctx.lists, v)
        ctx.apply_greedy(result, "compatible order", BOUND_ALL_BUT_CORE)
        for step, edge in enumerate(self.finishing_order(ctx)):
            if step < len(self.bounds):
                ctx.check_colored_neighbors(f"finish {step + 1}", edge, self.bounds[step])
            ctx.color_first_available(edge, f"finish {step + 1}")


class LoopHandler(_CenterFinisher):
    kind = StructureKind.LOOP
    name = "loop"
    bounds = LOOP_BOUNDS

    def finishing_order(self, ctx: HandlerContext) -> List[int]:
        loop = ctx.structure.edges[0]
        return [loop] + [e for e in ctx.graph.incident_edges(ctx.structure.vertex) if e != loop]


class ParallelHandler(_CenterFinisher):
    """The two edges off the pair go first, then the pair itself"""

    kind = StructureKind.PARALLEL
    name = "parallel"
    bounds = PARALLEL_BOUNDS

    def finishing_order(self, ctx: HandlerContext) -> List[int]:
        pair = list(ctx.structure.edges)
        others = [e for e in ctx.graph.incident_edges(ctx.structure.vertex) if e not in pair]
        return others + pair


def handle_nonsimple(graph: MultiGraph, lists: ListAssignment, witness: StructureClass) -> ColoringOutcome:
    if witness.kind is StructureKind.LOOP:
        return LoopHandler().execute(graph, lists, witness)
    if witness.kind is StructureKind.PARALLEL:
        return ParallelHandler().execute(graph, lists, witness)
    raise PreconditionError(f"expected a loop or parallel pair witness, got {witness.kind.value}")
