"""Handler for simple 4-regular graphs of girth at least 6.

Around a center v with edges e_0..e_3, A_i holds the three other edges at the
far end of e_i. Every A_i lies in the neighborhood of every e_j, so a color
placed on A_i that is missing from L(e_j), or repeated inside the A sets,
leaves e_j an extra available color. One edge per A_i is precolored to buy
enough slack for the four center edges.
"""
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, FrozenSet, List, Optional, Tuple

from strongce.core.coloring import ListAssignment
from strongce.core.graph import MultiGraph
from strongce.engine.base import BaseHandler, ColoringOutcome, HandlerContext, StructureClass, StructureKind
from strongce.errors import GuaranteeViolation, HandlerStuck, PreconditionError
from strongce.services.ordering import BOUND_WITH_PRECOLORED, color_with_precolored, pendant_sets


@dataclass(frozen=True)
class VertexContext:
    """The center, its edges e_i, the sets A_i and the union lists L(A_i)"""
    center: int
    edges: Tuple[int, ...]
    a_sets: Tuple[Tuple[int, ...], ...]
    a_lists: Tuple[FrozenSet[int], ...]
    e_lists: Tuple[FrozenSet[int], ...]

    def carrier(self, index: int, color: int, lists: ListAssignment) -> int:
        """First edge of A_index whose list holds `color`"""
        return next(a for a in self.a_sets[index] if color in lists[a])


def build_vertex_context(graph: MultiGraph, lists: ListAssignment, v: int) -> VertexContext:
    sets = pendant_sets(graph, v)
    if len(sets) != 4 or any(len(a_set) != 3 for _, a_set in sets):
        raise PreconditionError(f"vertex {v} needs four edges with three further edges each")
    edges = tuple(e for e, _ in sets)
    a_sets = tuple(a_set for _, a_set in sets)
    members = [a for a_set in a_sets for a in a_set]
    if len(set(members)) != 12:
        raise PreconditionError("the A sets must be pairwise disjoint")
    a_lists = tuple(frozenset(c for a in a_set for c in lists[a]) for a_set in a_sets)
    e_lists = tuple(frozenset(lists[e]) for e in edges)
    return VertexContext(v, edges, a_sets, a_lists, e_lists)


@dataclass
class Plan:
    """Colors to place on A sets (by index) and |L'| floors per center edge (by index)"""
    case: str
    colors: Dict[int, List[int]]
    floors: Tuple[int, ...]


def _plan_common_to_all(vc: VertexContext) -> Optional[Plan]:
    common = frozenset.intersection(*vc.a_lists)
    if not common:
        return None
    x = min(common)
    return Plan("color common to all four A sets", {i: [x] for i in range(4)}, (4, 4, 4, 4))


def _plan_common_to_three(vc: VertexContext) -> Optional[Plan]:
    for triple in combinations(range(4), 3):
        (rest,) = set(range(4)) - set(triple)
        shared = frozenset.intersection(*(vc.a_lists[i] for i in triple)) - vc.a_lists[rest]
        if not shared:
            continue
        x = min(shared)
        colors = {i: [x] for i in triple}
        for t in range(4):
            spare = vc.a_lists[rest] - vc.e_lists[t]
            if spare:
                colors[rest] = [min(spare)]
                floors = tuple(4 if i == t else 3 for i in range(4))
                return Plan(f"color common to three A sets, spare color for e{t}", colors, floors)
        return Plan("color common to three A sets, missing from every center list", colors, (4, 4, 4, 4))
    return None


def _plan_pair_outside_a_center_list(vc: VertexContext) -> Optional[Plan]:
    for i, j in combinations(range(4), 2):
        for x in sorted(vc.a_lists[i] & vc.a_lists[j]):
            missing = [t for t in range(4) if x not in vc.e_lists[t]]
            if not missing:
                continue
            t = missing[0]
            s = next(k for k in range(4) if k != t)
            k, l = sorted(set(range(4)) - {i, j})
            colors = {i: [x], j: [x]}
            y = sorted(vc.a_lists[k] - vc.e_lists[s])
            z = sorted(vc.a_lists[l] - vc.e_lists[s])
            floors = tuple(3 if m == t else 4 if m == s else 2 for m in range(4))
            if y:
                colors[k] = [y[0]]
            if z:
                colors[l] = [z[0]]
            if not y and not z:
                w = sorted(vc.a_lists[k] & vc.a_lists[l])
                if not w:
                    return None
                colors[k] = [w[0]]
                colors[l] = [w[0]]
                floors = tuple(4 if m in (t, s) else 3 for m in range(4))
            return Plan(f"pair color outside L(e{t})", colors, floors)
    return None


def _plan_staircase(vc: VertexContext) -> Optional[Plan]:
    """y avoids three center lists, z two, w one; finishing in reverse gives 1, 2, 3, 4 to spare"""
    for sigma in permutations(range(4)):
        lists = [vc.e_lists[i] for i in sigma]
        for alpha, beta, gamma in permutations(range(4), 3):
            y = vc.a_lists[alpha] - (lists[0] | lists[1] | lists[2])
            if not y:
                continue
            z = vc.a_lists[beta] - (lists[0] | lists[1])
            w = vc.a_lists[gamma] - lists[0]
            if z and w:
                floors = [0] * 4
                for rank, index in enumerate(sigma):
                    floors[index] = 4 - rank
                colors = {alpha: [min(y)], beta: [min(z)], gamma: [min(w)]}
                return Plan("staircase of missing colors", colors, tuple(floors))
    return None


def plan_precoloring(vc: VertexContext) -> Plan:
    for planner in (_plan_common_to_all, _plan_common_to_three, _plan_pair_outside_a_center_list, _plan_staircase):
        plan = planner(vc)
        if plan is not None:
            return plan
    raise HandlerStuck(f"no precoloring plan around vertex {vc.center}")


class RegularGirthSixHandler(BaseHandler):
    kind = StructureKind.REGULAR_GIRTH6
    name = "girth_six"

    def color(self, ctx: HandlerContext) -> None:
        graph, lists = ctx.graph, ctx.lists
        vc = build_vertex_context(graph, lists, ctx.structure.vertex)
        plan = plan_precoloring(vc)
        ctx.record(f"plan: {plan.case}")

        precolored: Dict[int, int] = {}
        for index in range(4):
            if index in plan.colors:
                color = plan.colors[index][0]
                edge = vc.carrier(index, color, lists)
            else:
                edge = min(vc.a_sets[index])
                color = lists[edge][0]
            precolored[edge] = color

        if plan.case.startswith("color common to all"):
            chosen = sorted(precolored)
            for e1, e2 in combinations(chosen, 2):
                if graph.edge_distance(e1, e2) <= 1:
                    raise GuaranteeViolation(f"edges {e1} and {e2} share a color but are within distance 1")

        result = color_with_precolored(graph, lists, vc.center, precolored)
        for edge, color in sorted(precolored.items()):
            ctx.record("precolor", edge, color)
        ctx.apply_greedy(result, "precolored completion", BOUND_WITH_PRECOLORED)

        for index, edge in enumerate(vc.edges):
            ctx.check_available(f"center edge e{index}", edge, plan.floors[index])
        ctx.finish_smallest_first(vc.edges, "center edge")


def handle_regular_girth6(graph: MultiGraph, lists: ListAssignment, v: int = 0) -> ColoringOutcome:
    return RegularGirthSixHandler().execute(graph, lists, StructureClass(StructureKind.REGULAR_GIRTH6, vertex=v))
