"""Color lists, partial colorings and the strong-coloring verifier"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from strongce.core.graph import MultiGraph
from strongce.errors import ColorConflictError, GraphError, ListAssignmentError, PreconditionError


class ListAssignment:
    """Ordered color list per edge; list order is the greedy preference order"""

    def __init__(self, lists: Iterable[Iterable[int]]):
        normalized: List[Tuple[int, ...]] = []
        for e, colors in enumerate(lists):
            colors = tuple(int(c) for c in colors)
            if len(set(colors)) != len(colors):
                raise ListAssignmentError(f"list of edge {e} contains a duplicate color")
            if any(c < 0 for c in colors):
                raise ListAssignmentError(f"list of edge {e} contains a negative color")
            normalized.append(colors)
        self._lists: Tuple[Tuple[int, ...], ...] = tuple(normalized)

    @classmethod
    def uniform(cls, edge_count: int, k: int) -> "ListAssignment":
        """Every edge gets the colors 1..k"""
        return cls([range(1, k + 1)] * edge_count)

    @property
    def lists(self) -> Tuple[Tuple[int, ...], ...]:
        return self._lists

    def __getitem__(self, e: int) -> Tuple[int, ...]:
        return self._lists[e]

    def __len__(self) -> int:
        return len(self._lists)

    def __iter__(self):
        return iter(self._lists)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ListAssignment):
            return NotImplemented
        return self._lists == other._lists

    def __repr__(self) -> str:
        return f"ListAssignment({[list(lst) for lst in self._lists]})"

    def min_size(self) -> int:
        return min((len(lst) for lst in self._lists), default=0)

    def truncated(self, size: int) -> "ListAssignment":
        """Keep the first `size` colors of every list"""
        return ListAssignment(lst[:size] for lst in self._lists)

    def restricted(self, edge_map: Sequence[int]) -> "ListAssignment":
        """Lists for a subgraph whose local edge i is edge_map[i] here"""
        return ListAssignment(self._lists[e] for e in edge_map)

    def check_graph(self, graph: MultiGraph) -> None:
        if len(self._lists) != graph.edge_count:
            raise ListAssignmentError(
                f"graph has {graph.edge_count} edges but {len(self._lists)} lists were given"
            )


class PartialColoring:
    """A partial strong coloring that keeps itself valid on every assign"""

    def __init__(self, graph: MultiGraph, lists: ListAssignment, colors: Optional[Sequence[Optional[int]]] = None):
        lists.check_graph(graph)
        self._graph = graph
        self._lists = lists
        self._colors: List[Optional[int]] = [None] * graph.edge_count
        if colors is not None:
            if len(colors) != graph.edge_count:
                raise GraphError(f"expected {graph.edge_count} colors, got {len(colors)}")
            for e, c in enumerate(colors):
                if c is not None:
                    self.assign(e, c)

    @property
    def graph(self) -> MultiGraph:
        return self._graph

    @property
    def lists(self) -> ListAssignment:
        return self._lists

    def color_of(self, e: int) -> Optional[int]:
        return self._colors[e]

    def is_colored(self, e: int) -> bool:
        return self._colors[e] is not None

    def colored_edges(self) -> List[int]:
        return [e for e, c in enumerate(self._colors) if c is not None]

    def uncolored_edges(self) -> List[int]:
        return [e for e, c in enumerate(self._colors) if c is None]

    def is_complete(self) -> bool:
        return all(c is not None for c in self._colors)

    def as_list(self) -> List[Optional[int]]:
        return list(self._colors)

    def used_in_neighborhood(self, e: int) -> set:
        return {self._colors[f] for f in self._graph.neighborhood(e) if self._colors[f] is not None}

    def available_colors(self, e: int) -> Tuple[int, ...]:
        """L'(e): colors of L(e) not used on N(e), in list order"""
        if self._colors[e] is not None:
            raise PreconditionError(f"edge {e} is already colored")
        used = self.used_in_neighborhood(e)
        return tuple(c for c in self._lists[e] if c not in used)

    def colored_neighborhood_size(self, e: int) -> int:
        """|N'(e)|"""
        return sum(1 for f in self._graph.neighborhood(e) if self._colors[f] is not None)

    def clashing_edge(self, e: int, color: int) -> Optional[int]:
        for f in sorted(self._graph.neighborhood(e)):
            if self._colors[f] == color:
                return f
        return None

    def assign(self, e: int, color: int) -> "PartialColoring":
        if self._colors[e] is not None:
            raise PreconditionError(f"edge {e} is already colored with {self._colors[e]}")
        if color not in self._lists[e]:
            raise ColorConflictError(e, color)
        clash = self.clashing_edge(e, color)
        if clash is not None:
            raise ColorConflictError(e, color, clash)
        self._colors[e] = color
        return self

    def unassign(self, e: int) -> "PartialColoring":
        if self._colors[e] is None:
            raise PreconditionError(f"edge {e} is not colored")
        self._colors[e] = None
        return self

    def copy(self) -> "PartialColoring":
        clone = PartialColoring.__new__(PartialColoring)
        clone._graph = self._graph
        clone._lists = self._lists
        clone._colors = list(self._colors)
        return clone

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialColoring):
            return NotImplemented
        return self._graph == other._graph and self._lists == other._lists and self._colors == other._colors

    def __repr__(self) -> str:
        colored = sum(1 for c in self._colors if c is not None)
        return f"PartialColoring({colored}/{len(self._colors)} colored)"


class ViolationKind(Enum):
    """Kinds of verifier findings"""
    UNCOLORED = "UNCOLORED"
    LIST = "LIST"
    CONFLICT = "CONFLICT"


@dataclass
class VerificationReport:
    """Result of verify_strong; carries the first violation when not ok"""
    ok: bool
    kind: Optional[ViolationKind] = None
    edge: Optional[int] = None
    other_edge: Optional[int] = None
    color: Optional[int] = None

    @classmethod
    def success_response(cls) -> "VerificationReport":
        return cls(ok=True)

    @classmethod
    def error_response(cls, kind: ViolationKind, edge: int, color: Optional[int] = None,
                       other_edge: Optional[int] = None) -> "VerificationReport":
        return cls(ok=False, kind=kind, edge=edge, other_edge=other_edge, color=color)

    def describe(self) -> str:
        if self.ok:
            return "OK"
        if self.kind is ViolationKind.CONFLICT:
            return f"CONFLICT {self.edge} {self.other_edge} {self.color}"
        if self.kind is ViolationKind.LIST:
            return f"LIST {self.edge} {self.color}"
        return f"UNCOLORED {self.edge}"


def verify_strong(graph: MultiGraph, lists: ListAssignment, coloring: Sequence[Optional[int]],
                  allow_uncolored: bool = False) -> VerificationReport:
    """Check a full coloring; the first violation by edge-id pair is reported.

    A missing color or a list violation on edge e ranks as the pair (e, e),
    so it precedes every conflict (e, f) with f > e. With allow_uncolored the
    check covers the colored pairs of a partial coloring only.
    """
    lists.check_graph(graph)
    if len(coloring) != graph.edge_count:
        raise GraphError(f"expected {graph.edge_count} colors, got {len(coloring)}")
    for e in range(graph.edge_count):
        color = coloring[e]
        if color is None:
            if allow_uncolored:
                continue
            return VerificationReport.error_response(ViolationKind.UNCOLORED, e)
        if color not in lists[e]:
            return VerificationReport.error_response(ViolationKind.LIST, e, color)
        for f in sorted(graph.neighborhood(e)):
            if f > e and coloring[f] == color:
                return VerificationReport.error_response(ViolationKind.CONFLICT, e, color, f)
    return VerificationReport.success_response()


def coloring_from_mapping(edge_count: int, mapping: Dict[int, int]) -> List[Optional[int]]:
    return [mapping.get(e) for e in range(edge_count)]
