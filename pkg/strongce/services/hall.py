"""Hall's theorem in practice: matchings, distinct representatives and discrepancy"""
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Hashable, List, Mapping, Optional, Sequence, Tuple

from strongce.config import get_settings
from strongce.core.coloring import PartialColoring
from strongce.errors import ColorConflictError, ExtensionFailed, GuaranteeViolation, PreconditionError
from strongce.utils.logger import get_logger

logger = get_logger("hall")

EXHAUSTIVE_LIMIT = 20


class HopcroftKarp:
    """Maximum-cardinality bipartite matching on 0-based left/right indices.

    Adjacency lists are scanned in the given order, so the matching found is
    deterministic.
    """

    def __init__(self, num_left: int, num_right: int, adjacency: Sequence[Sequence[int]]):
        self.num_left = num_left
        self.num_right = num_right
        self.adjacency = [list(dict.fromkeys(row)) for row in adjacency]
        # -1 is the NIL vertex
        self.match_left: List[int] = [-1] * num_left
        self.match_right: List[int] = [-1] * num_right
        self._dist: Dict[int, int] = {}

    def _layer(self) -> bool:
        """BFS from the free left vertices; True when an augmenting path exists"""
        queue = deque()
        infinite = self.num_left + 1
        for u in range(self.num_left):
            if self.match_left[u] == -1:
                self._dist[u] = 0
                queue.append(u)
            else:
                self._dist[u] = infinite
        self._dist[-1] = infinite
        while queue:
            u = queue.popleft()
            if self._dist[u] < self._dist[-1]:
                for r in self.adjacency[u]:
                    partner = self.match_right[r]
                    if self._dist[partner] == infinite:
                        self._dist[partner] = self._dist[u] + 1
                        if partner != -1:
                            queue.append(partner)
        return self._dist[-1] != infinite

    def _augment(self, u: int) -> bool:
        if u == -1:
            return True
        for r in self.adjacency[u]:
            partner = self.match_right[r]
            if self._dist[partner] == self._dist[u] + 1 and self._augment(partner):
                self.match_right[r] = u
                self.match_left[u] = r
                return True
        self._dist[u] = self.num_left + 1
        return False

    def __call__(self) -> List[Tuple[int, int]]:
        self.match_left = [-1] * self.num_left
        self.match_right = [-1] * self.num_right
        self._dist = {}
        while self._layer():
            for u in range(self.num_left):
                if self.match_left[u] == -1:
                    self._augment(u)
        return [(u, r) for u, r in enumerate(self.match_left) if r != -1]

    def alternating_reach(self) -> List[int]:
        """Left vertices reachable by alternating paths from free left vertices"""
        seen = [self.match_left[u] == -1 for u in range(self.num_left)]
        queue = deque(u for u in range(self.num_left) if seen[u])
        while queue:
            u = queue.popleft()
            for r in self.adjacency[u]:
                partner = self.match_right[r]
                if partner != -1 and not seen[partner]:
                    seen[partner] = True
                    queue.append(partner)
        return [u for u in range(self.num_left) if seen[u]]


def _index(left: Sequence[Hashable], adjacency: Mapping[Hashable, Sequence[Hashable]]):
    right: List[Hashable] = []
    position: Dict[Hashable, int] = {}
    rows = []
    for item in left:
        row = []
        for color in adjacency[item]:
            if color not in position:
                position[color] = len(right)
                right.append(color)
            row.append(position[color])
        rows.append(row)
    return HopcroftKarp(len(left), len(right), rows), right


def max_bipartite_matching(left: Sequence[Hashable], adjacency: Mapping[Hashable, Sequence[Hashable]]) -> Dict[Hashable, Hashable]:
    """Maximum matching from `left` items into the union of their adjacency lists"""
    solver, right = _index(left, adjacency)
    return {left[u]: right[r] for u, r in solver()}


def sdr_completion(edges: Sequence[int], lists: Mapping[int, Sequence[int]]) -> Optional[Dict[int, int]]:
    """Pairwise-distinct colors, one from each list, or None when Hall's condition fails"""
    matching = max_bipartite_matching(list(edges), lists)
    if len(matching) < len(edges):
        return None
    return {e: matching[e] for e in edges}


@dataclass(frozen=True)
class DiscrepancyReport:
    """A subset S of edges and the union U of their lists"""
    subset: Tuple[int, ...]
    union: FrozenSet[int]

    @property
    def disc(self) -> int:
        return len(self.subset) - len(self.union)

    @classmethod
    def of(cls, subset: Sequence[int], lists: Mapping[int, Sequence[int]]) -> "DiscrepancyReport":
        union = frozenset(c for e in subset for c in lists[e])
        return cls(tuple(sorted(subset)), union)


def _deficiency_set(edges: Sequence[int], lists: Mapping[int, Sequence[int]]) -> Tuple[int, List[int]]:
    solver, _ = _index(edges, lists)
    size = len(solver())
    return len(edges) - size, [edges[u] for u in solver.alternating_reach()]


def max_discrepancy_set(edges: Sequence[int], lists: Mapping[int, Sequence[int]]) -> DiscrepancyReport:
    """A nonempty subset of maximum discrepancy, found through matching duality.

    With a deficient matching the König set of the free left vertices is
    optimal. Otherwise every subset has discrepancy at most 0 and the best one
    is found by forcing each edge in turn and solving the residual instance.
    """
    edges = list(edges)
    if not edges:
        raise PreconditionError("discrepancy needs a nonempty edge set")
    deficiency, reach = _deficiency_set(edges, lists)
    if deficiency > 0:
        report = DiscrepancyReport.of(reach, lists)
    else:
        report = None
        for t in edges:
            own = set(lists[t])
            rest = [e for e in edges if e != t]
            residual = {e: [c for c in lists[e] if c not in own] for e in rest}
            rest_deficiency, rest_reach = _deficiency_set(rest, residual) if rest else (0, [])
            candidate = DiscrepancyReport.of([t] + rest_reach, lists)
            if candidate.disc != 1 - len(own) + rest_deficiency:
                raise GuaranteeViolation(f"discrepancy bookkeeping mismatch while forcing edge {t}")
            if report is None or candidate.disc > report.disc:
                report = candidate

    if get_settings().debug_checks and len(edges) <= 12:
        expected = exhaustive_max_discrepancy(edges, lists).disc
        if expected != report.disc:
            raise GuaranteeViolation(f"max discrepancy {report.disc} disagrees with exhaustive value {expected}")
    return report


def exhaustive_max_discrepancy(edges: Sequence[int], lists: Mapping[int, Sequence[int]]) -> DiscrepancyReport:
    """Check all nonempty subsets; small inputs only"""
    edges = list(edges)
    if not edges:
        raise PreconditionError("discrepancy needs a nonempty edge set")
    if len(edges) > EXHAUSTIVE_LIMIT:
        raise PreconditionError(f"exhaustive discrepancy is limited to {EXHAUSTIVE_LIMIT} edges")
    best = None
    for size in range(1, len(edges) + 1):
        for subset in combinations(edges, size):
            candidate = DiscrepancyReport.of(subset, lists)
            if best is None or candidate.disc > best.disc:
                best = candidate
    return best


SubsetColorer = Callable[[DiscrepancyReport, PartialColoring], Mapping[int, int]]


@dataclass
class Extension:
    """Colors for every edge of T and the discrepancy set that was colored first"""
    assignment: Dict[int, int]
    report: DiscrepancyReport


def color_max_disc_then_extend(coloring: PartialColoring, edges: Sequence[int],
                               subset_colorer: SubsetColorer) -> Extension:
    """Color a maximum-discrepancy set through the callback, then finish by SDR.

    The input coloring is left untouched. Residual edges keep every color not
    used on a conflicting edge of S, which contains the lists that Hall's
    condition is guaranteed for when S has maximum discrepancy.
    """
    edges = list(edges)
    lists = {e: coloring.available_colors(e) for e in edges}
    report = max_discrepancy_set(edges, lists)
    work = coloring.copy()
    assignment: Dict[int, int] = {}

    if report.disc > 0:
        chosen = dict(subset_colorer(report, coloring.copy()))
        if set(chosen) != set(report.subset):
            raise ExtensionFailed(f"subset colorer covered {sorted(chosen)} instead of {list(report.subset)}")
        for e in report.subset:
            if chosen[e] not in lists[e]:
                raise ExtensionFailed(f"color {chosen[e]} is not available for edge {e}")
            try:
                work.assign(e, chosen[e])
            except ColorConflictError as exc:
                raise ExtensionFailed(f"subset coloring is not strong: {exc}") from exc
        assignment.update(chosen)
        logger.debug(f"colored discrepancy set of size {len(report.subset)} (disc {report.disc})")

    rest = [e for e in edges if e not in assignment]
    residual = {e: work.available_colors(e) for e in rest}
    completion = sdr_completion(rest, residual)
    if completion is None:
        raise ExtensionFailed(f"no distinct representatives for {len(rest)} residual edges")
    assignment.update(completion)
    return Extension(assignment, report)
