"""Handler for a 4-cycle in a simple 4-regular triangle-free graph.

Around the cycle v0 v1 v2 v3 (edge c_i joins v_i and v_{i+1}) every vertex
carries two pendant edges. Pendants at opposite vertices form a pack; two of
them meeting off the cycle form an adjacent pair, and an edge joining the far
ends of a non-meeting pair is a diagonal. The case split follows the number
of adjacent pairs.
"""
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from strongce.core.coloring import ListAssignment, PartialColoring
from strongce.core.graph import Cycle, MultiGraph
from strongce.engine.base import BaseHandler, ColoringOutcome, HandlerContext, StructureClass, StructureKind
from strongce.errors import ColorConflictError, ExtensionFailed, GuaranteeViolation, HandlerStuck, PreconditionError
from strongce.services.hall import DiscrepancyReport, color_max_disc_then_extend
from strongce.services.ordering import BOUND_ALL_BUT_CORE, color_all_but_cycle

Pair = Tuple[int, int]

# |L'| floors once everything outside the cycle and its pendants is colored
ONE_PAIR_CYCLE_FLOOR = 11
NO_PAIR_CYCLE_FLOOR = 10
PENDANT_FLOOR = 7


@dataclass(frozen=True)
class FourCycleContext:
    """Labeled neighborhood of a 4-cycle"""
    cycle: Cycle
    pendants: Tuple[Pair, ...]
    far_end: Mapping[int, int]
    adjacent_pairs: Tuple[Pair, ...]
    packs: Tuple[Tuple[int, ...], Tuple[int, ...]]
    diagonals: Tuple[Tuple[int, ...], Tuple[int, ...]]
    free_pairs: Tuple[Tuple[Pair, ...], Tuple[Pair, ...]]

    @property
    def cycle_edges(self) -> Tuple[int, ...]:
        return self.cycle.edges

    @property
    def pendant_edges(self) -> List[int]:
        return sorted(e for pair in self.pendants for e in pair)

    @property
    def core(self) -> List[int]:
        return list(self.cycle.edges) + self.pendant_edges

    def pack_of(self, edge: int) -> int:
        for index, pack in enumerate(self.packs):
            if edge in pack:
                return index
        raise PreconditionError(f"edge {edge} is not a pendant of this 4-cycle")


def _cross_pairs(pendants: Sequence[Pair], pack: int) -> List[Pair]:
    return [(p, q) for p in pendants[pack] for q in pendants[pack + 2]]


def analyze_4cycle(graph: MultiGraph, cycle: Cycle) -> FourCycleContext:
    """Pendants, packs, adjacent pairs, diagonals and same-color candidates of a 4-cycle"""
    if len(cycle) != 4:
        raise PreconditionError(f"expected a 4-cycle, got length {len(cycle)}")
    if not graph.is_simple() or not graph.is_regular(4):
        raise PreconditionError("4-cycle analysis needs a simple 4-regular graph")
    if graph.find_cycle_of_length(3) is not None:
        raise PreconditionError("4-cycle analysis needs a triangle-free graph")

    on_cycle = set(cycle.edges)
    pendants: List[Pair] = []
    far_end: Dict[int, int] = {}
    for v in cycle.vertices:
        own = [e for e in graph.incident_edges(v) if e not in on_cycle]
        if len(own) != 2:
            raise PreconditionError(f"cycle vertex {v} has {len(own)} pendant edges, expected 2")
        pendants.append((own[0], own[1]))
        for e in own:
            far_end[e] = graph.other_end(e, v)

    adjacent: List[Pair] = []
    diagonals: List[Tuple[int, ...]] = []
    free: List[Tuple[Pair, ...]] = []
    for pack in (0, 1):
        pack_diagonals = []
        pack_free = []
        for p, q in _cross_pairs(pendants, pack):
            x, y = far_end[p], far_end[q]
            if x == y:
                adjacent.append((p, q))
                continue
            pack_diagonals.extend(f for f in graph.incident_edges(x) if graph.other_end(f, x) == y)
            if graph.edge_distance(p, q) >= 2:
                pack_free.append((p, q))
        diagonals.append(tuple(sorted(pack_diagonals)))
        free.append(tuple(pack_free))

    packs = (pendants[0] + pendants[2], pendants[1] + pendants[3])
    return FourCycleContext(cycle, tuple(pendants), far_end, tuple(adjacent), packs,
                            (diagonals[0], diagonals[1]), (free[0], free[1]))


class FourCycleHandler(BaseHandler):
    kind = StructureKind.CYCLE4
    name = "four_cycle"

    def color(self, ctx: HandlerContext) -> None:
        four = analyze_4cycle(ctx.graph, ctx.structure.cycle)
        ctx.record(f"{len(four.adjacent_pairs)} adjacent pairs, diagonals per pack "
                   f"{len(four.diagonals[0])}/{len(four.diagonals[1])}")
        full_pack = next((pack for pack in (0, 1) if len(four.diagonals[pack]) == 4), None)
        if len(four.adjacent_pairs) >= 2:
            self._two_pairs(ctx, four)
        elif full_pack is not None:
            self._four_diagonals(ctx, four, full_pack)
        elif len(four.adjacent_pairs) == 1:
            self._one_pair(ctx, four)
        else:
            self._no_pairs(ctx, four)

    def _color_pendants(self, ctx: HandlerContext, pendants: Sequence[int]) -> None:
        for p in pendants:
            if not ctx.coloring.is_colored(p):
                ctx.check_colored_neighbors("pendant", p, BOUND_ALL_BUT_CORE)
                ctx.color_first_available(p, "pendant")

    def _two_pairs(self, ctx: HandlerContext, four: FourCycleContext) -> None:
        ctx.record("case: at least two adjacent pairs")
        result = color_all_but_cycle(ctx.graph, ctx.lists, four.cycle)
        ctx.apply_greedy(result, "compatible order", BOUND_ALL_BUT_CORE)
        for c in four.cycle_edges:
            ctx.check_available("cycle edge", c, 4)
        ctx.finish_smallest_first(four.cycle_edges, "cycle edge")

    def _four_diagonals(self, ctx: HandlerContext, four: FourCycleContext, pack: int) -> None:
        ctx.record(f"case: pack {pack} has four diagonal edges")
        deferred = four.diagonals[pack]
        result = color_all_but_cycle(ctx.graph, ctx.lists, four.cycle, extra_uncolored=deferred)
        ctx.apply_greedy(result, "compatible order", BOUND_ALL_BUT_CORE)
        ctx.finish_smallest_first(four.cycle_edges, "cycle edge")
        ctx.finish_smallest_first(deferred, "diagonal edge")

    def _uncolor_core(self, ctx: HandlerContext, four: FourCycleContext, cycle_floor: int,
                      pendant_floor_packs: Sequence[int]) -> None:
        result = color_all_but_cycle(ctx.graph, ctx.lists, four.cycle, extra_uncolored=four.pendant_edges)
        ctx.apply_greedy(result, "compatible order", BOUND_ALL_BUT_CORE)
        for c in four.cycle_edges:
            ctx.check_available("cycle edge", c, cycle_floor)
        for pack in pendant_floor_packs:
            for p in four.packs[pack]:
                ctx.check_available("pendant", p, PENDANT_FLOOR)

    def _one_pair(self, ctx: HandlerContext, four: FourCycleContext) -> None:
        ctx.record("case: exactly one adjacent pair")
        free_pack = 1 - four.pack_of(four.adjacent_pairs[0][0])
        self._uncolor_core(ctx, four, ONE_PAIR_CYCLE_FLOOR, [free_pack])
        coloring = ctx.coloring
        pendants = four.pendant_edges

        saving = self._missing_color(coloring, pendants, four.cycle_edges)
        if saving is not None:
            p, c, x = saving
            ctx.assign(p, x, f"pendant takes a color missing from cycle edge {c}")
            last = c
        else:
            last = next((c for c in four.cycle_edges
                         if len(coloring.available_colors(c)) > ONE_PAIR_CYCLE_FLOOR), None)
            if last is not None:
                ctx.record("a cycle edge has spare colors", last)
            else:
                pairs = list(four.free_pairs[free_pack]) + list(four.free_pairs[1 - free_pack])
                if not self._share_color(ctx, pairs):
                    raise HandlerStuck("no nonadjacent pendant pair shares an available color")
                last = four.cycle_edges[-1]

        self._color_pendants(ctx, pendants)
        ctx.finish_smallest_first([c for c in four.cycle_edges if c != last], "cycle edge")
        ctx.color_first_available(last, "last cycle edge")

    @staticmethod
    def _missing_color(coloring: PartialColoring, pendants: Sequence[int],
                       cycle_edges: Sequence[int]) -> Optional[Tuple[int, int, int]]:
        for p in pendants:
            own = coloring.available_colors(p)
            for c in cycle_edges:
                theirs = set(coloring.available_colors(c))
                x = next((x for x in own if x not in theirs), None)
                if x is not None:
                    return p, c, x
        return None

    @staticmethod
    def _share_color(ctx: HandlerContext, pairs: Sequence[Pair]) -> bool:
        for p, q in pairs:
            if ctx.coloring.is_colored(p) or ctx.coloring.is_colored(q):
                continue
            theirs = set(ctx.coloring.available_colors(q))
            common = [x for x in ctx.coloring.available_colors(p) if x in theirs]
            if common:
                ctx.assign(p, common[0], "same color on a nonadjacent pair")
                ctx.assign(q, common[0], "same color on a nonadjacent pair")
                return True
        return False

    def _no_pairs(self, ctx: HandlerContext, four: FourCycleContext) -> None:
        ctx.record("case: no adjacent pairs")
        self._uncolor_core(ctx, four, NO_PAIR_CYCLE_FLOOR, [0, 1])

        def color_subset(report: DiscrepancyReport, work: PartialColoring) -> Dict[int, int]:
            return self._color_discrepancy_set(four, report, work)

        extension = color_max_disc_then_extend(ctx.coloring, four.core, color_subset)
        ctx.record(f"discrepancy set of size {len(extension.report.subset)}, disc {extension.report.disc}")
        try:
            for edge in four.core:
                ctx.assign(edge, extension.assignment[edge], "extension")
        except ColorConflictError as exc:
            raise GuaranteeViolation(f"extended coloring is not strong: {exc}") from exc

    @staticmethod
    def _color_discrepancy_set(four: FourCycleContext, report: DiscrepancyReport,
                               work: PartialColoring) -> Dict[int, int]:
        subset = set(report.subset)
        chosen: Dict[int, int] = {}

        def put(edge: int, color: int) -> None:
            work.assign(edge, color)
            chosen[edge] = color

        def first(edge: int) -> int:
            available = work.available_colors(edge)
            if not available:
                raise ExtensionFailed(f"no color left for edge {edge} of the discrepancy set")
            return available[0]

        pendants = [p for p in four.pendant_edges if p in subset]
        cycle_edges = [c for c in four.cycle_edges if c in subset]
        missing = [p for p in four.pendant_edges if p not in subset]
        if cycle_edges:
            if not missing:
                packs = [0, 1]
            elif len(missing) == 1:
                packs = [1 - four.pack_of(missing[0])]
            else:
                packs = []
            for pack in packs:
                for p, q in four.free_pairs[pack]:
                    theirs = set(work.available_colors(q))
                    common = [x for x in work.available_colors(p) if x in theirs]
                    if common:
                        put(p, common[0])
                        put(q, common[0])
                        break
                else:
                    raise ExtensionFailed(f"no free pair of pack {pack} shares a color")
        for p in pendants:
            if p not in chosen:
                put(p, first(p))
        pending = list(cycle_edges)
        while pending:
            c = min(pending, key=lambda e: (len(work.available_colors(e)), e))
            put(c, first(c))
            pending.remove(c)
        return chosen


def handle_4cycle(graph: MultiGraph, lists: ListAssignment, cycle: Cycle) -> ColoringOutcome:
    return FourCycleHandler().execute(graph, lists, StructureClass(StructureKind.CYCLE4, cycle=cycle))
