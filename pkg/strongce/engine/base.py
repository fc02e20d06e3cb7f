"""Base handler classes and types"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple

from strongce.config import get_settings
from strongce.core.coloring import ListAssignment, PartialColoring, verify_strong
from strongce.core.graph import Cycle, MultiGraph
from strongce.errors import ExtensionFailed, GuaranteeViolation, HandlerStuck
from strongce.services.ordering import GreedyResult
from strongce.utils.logger import get_logger


class StructureKind(Enum):
    """Structures a connected graph is dispatched on, in priority order"""
    LOW_DEGREE = "LowDegree"
    LOOP = "LoopAt"
    PARALLEL = "ParallelPair"
    CYCLE3 = "Cycle3"
    CYCLE4 = "Cycle4"
    CYCLE5 = "Cycle5"
    REGULAR_GIRTH6 = "RegularGirth6"


@dataclass(frozen=True)
class StructureClass:
    """A structure together with its witness"""
    kind: StructureKind
    vertex: Optional[int] = None
    edges: Tuple[int, ...] = ()
    cycle: Optional[Cycle] = None

    def describe(self) -> str:
        if self.cycle is not None:
            return f"{self.kind.value}(edges={list(self.cycle.edges)})"
        if self.edges:
            return f"{self.kind.value}(v={self.vertex}, edges={list(self.edges)})"
        return f"{self.kind.value}(v={self.vertex})"


@dataclass
class TraceStep:
    """One recorded step of a handler run"""
    handler: str
    message: str
    edge: Optional[int] = None
    color: Optional[int] = None


@dataclass
class BoundCheck:
    """A counting bound observed at a designated point.

    kind "at_most" bounds |N'(e)| from above, "at_least" bounds |L'(e)| from below.
    """
    label: str
    edge: int
    observed: int
    bound: int
    kind: str = "at_most"

    @property
    def held(self) -> bool:
        if self.kind == "at_most":
            return self.observed <= self.bound
        return self.observed >= self.bound


@dataclass
class ColoringOutcome:
    """Full coloring with the handlers used, fallback depth and trace"""
    coloring: List[int]
    handlers: List[str]
    fallback_depth: int = 0
    trace: List[TraceStep] = field(default_factory=list)
    bound_checks: List[BoundCheck] = field(default_factory=list)

    @property
    def handler(self) -> str:
        return ",".join(dict.fromkeys(self.handlers)) if self.handlers else "none"

    @property
    def bound_misses(self) -> List[BoundCheck]:
        return [check for check in self.bound_checks if not check.held]

    @classmethod
    def success_response(cls, coloring: Sequence[int], handler: str, depth: int,
                         trace: List[TraceStep], checks: List[BoundCheck]) -> "ColoringOutcome":
        return cls(list(coloring), [handler], depth, trace, checks)


class HandlerContext:
    """Mutable state of one handler run: the current coloring, trace and bound checks"""

    def __init__(self, graph: MultiGraph, lists: ListAssignment, structure: StructureClass,
                 name: str, logger: logging.Logger):
        self.graph = graph
        self.lists = lists
        self.structure = structure
        self.name = name
        self.logger = logger
        self.coloring = PartialColoring(graph, lists)
        self.trace: List[TraceStep] = []
        self.bound_checks: List[BoundCheck] = []
        self._debug = get_settings().debug_checks

    def record(self, message: str, edge: Optional[int] = None, color: Optional[int] = None) -> None:
        self.trace.append(TraceStep(self.name, message, edge, color))
        self.logger.debug(message if edge is None else f"{message} (edge {edge}, color {color})")

    def _check(self, check: BoundCheck) -> None:
        self.bound_checks.append(check)
        if not check.held:
            relation = "<=" if check.kind == "at_most" else ">="
            self.logger.warning(
                f"{check.label}: edge {check.edge} observed {check.observed}, expected {relation} {check.bound}",
                extra={"context": {"handler": self.name, "label": check.label, "edge": check.edge,
                                   "observed": check.observed, "bound": check.bound, "kind": check.kind}},
            )

    def check_colored_neighbors(self, label: str, edge: int, bound: int) -> None:
        self._check(BoundCheck(label, edge, self.coloring.colored_neighborhood_size(edge), bound, "at_most"))

    def check_available(self, label: str, edge: int, bound: int) -> None:
        self._check(BoundCheck(label, edge, len(self.coloring.available_colors(edge)), bound, "at_least"))

    def apply_greedy(self, result: GreedyResult, label: str, bound: int) -> None:
        """Adopt a greedy pass and record its per-edge |N'| against `bound`"""
        for edge, observed in result.neighborhood_sizes.items():
            self._check(BoundCheck(label, edge, observed, bound, "at_most"))
        self.coloring = result.coloring
        self.record(f"{label}: colored {len(result.neighborhood_sizes)} edges")
        self._verify_step(label)

    def assign(self, edge: int, color: int, note: str = "assign") -> None:
        self.coloring.assign(edge, color)
        self.record(note, edge, color)

    def color_first_available(self, edge: int, note: str) -> int:
        available = self.coloring.available_colors(edge)
        if not available:
            raise HandlerStuck(f"{self.name}: no color left for edge {edge} ({note})", edge)
        self.assign(edge, available[0], note)
        return available[0]

    def color_in_order(self, edges: Iterable[int], note: str) -> None:
        for edge in edges:
            self.color_first_available(edge, note)
        self._verify_step(note)

    def finish_smallest_first(self, edges: Iterable[int], note: str) -> None:
        """Color `edges`, always taking the one with the fewest available colors next"""
        pending = [e for e in edges if not self.coloring.is_colored(e)]
        while pending:
            edge = min(pending, key=lambda e: (len(self.coloring.available_colors(e)), e))
            self.color_first_available(edge, note)
            pending.remove(edge)
        self._verify_step(note)

    def _verify_step(self, label: str) -> None:
        if not self._debug:
            return
        report = verify_strong(self.graph, self.lists, self.coloring.as_list(), allow_uncolored=True)
        if not report.ok:
            raise GuaranteeViolation(f"{self.name}/{label}: partial coloring invalid: {report.describe()}")


class BaseHandler:
    """Base class for all structure handlers"""

    kind: StructureKind = StructureKind.LOW_DEGREE
    name: str = "base"

    def __init__(self):
        self.logger = get_logger(f"handler.{self.name}")

    def color(self, ctx: HandlerContext) -> None:
        """Color every edge of ctx.coloring (override in subclass)"""
        raise NotImplementedError("Subclass must implement color()")

    def execute(self, graph: MultiGraph, lists: ListAssignment, structure: StructureClass,
                seed: Optional[int] = None) -> ColoringOutcome:
        """Run the handler; any gap between the counting argument and the run goes to the fallback"""
        from strongce.engine.fallback import fallback_backtrack

        ctx = HandlerContext(graph, lists, structure, self.name, self.logger)
        ctx.record(f"structure {structure.describe()}")
        depth = 0
        try:
            self.color(ctx)
            if not ctx.coloring.is_complete():
                raise HandlerStuck(f"{self.name} left {len(ctx.coloring.uncolored_edges())} edges uncolored")
        except (HandlerStuck, ExtensionFailed, GuaranteeViolation) as exc:
            if isinstance(exc, GuaranteeViolation):
                self.logger.error(f"{self.name}: guarantee violated: {exc}")
            else:
                self.logger.warning(f"{self.name}: {exc}; entering fallback",
                                    extra={"context": {"handler": self.name, "reason": type(exc).__name__}})
            ctx.record(f"fallback after: {exc}")
            rescue = fallback_backtrack(graph, lists, ctx.coloring, ctx.coloring.uncolored_edges(), seed=seed)
            ctx.trace.extend(rescue.trace)
            ctx.coloring = PartialColoring(graph, lists, rescue.coloring)
            depth = rescue.fallback_depth

        final = ctx.coloring.as_list()
        report = verify_strong(graph, lists, final)
        if not report.ok:
            raise GuaranteeViolation(f"{self.name} produced an invalid coloring: {report.describe()}")
        return ColoringOutcome.success_response(final, self.name, depth, ctx.trace, ctx.bound_checks)
