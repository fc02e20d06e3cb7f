"""Multigraph model: edge distance, neighborhoods, girth and the conflict graph"""
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from strongce.errors import GraphError, PreconditionError

INFINITE = math.inf

Distance = Union[int, float]


@dataclass(frozen=True)
class Cycle:
    """A cycle given as vertices and edges; edges[i] joins vertices[i] and vertices[i + 1]"""
    vertices: Tuple[int, ...]
    edges: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class ConflictGraph:
    """Edges of a multigraph, adjacent when they lie at distance at most one"""
    edge_count: int
    adjacency: Tuple[FrozenSet[int], ...]

    def are_conflicting(self, e1: int, e2: int) -> bool:
        return e2 in self.adjacency[e1]

    def pairs(self) -> List[Tuple[int, int]]:
        return [(e1, e2) for e1 in range(self.edge_count) for e2 in sorted(self.adjacency[e1]) if e1 < e2]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.edge_count))
        graph.add_edges_from(self.pairs())
        return graph


@dataclass(frozen=True)
class Component:
    """A connected component with maps from local ids back to the parent graph"""
    graph: "MultiGraph"
    vertex_map: Tuple[int, ...]
    edge_map: Tuple[int, ...]


class MultiGraph:
    """Immutable multigraph; loops and parallel edges allowed, a loop adds 2 to its degree"""

    def __init__(self, vertex_count: int, edges: Iterable[Tuple[int, int]]):
        if vertex_count < 0:
            raise GraphError(f"vertex count must be non-negative, got {vertex_count}")
        self._vertex_count = vertex_count
        normalized: List[Tuple[int, int]] = []
        for index, (u, v) in enumerate(edges):
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge {index} = ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")
            normalized.append((int(u), int(v)))
        self._edges: Tuple[Tuple[int, int], ...] = tuple(normalized)

        incidence: List[List[int]] = [[] for _ in range(vertex_count)]
        for e, (u, v) in enumerate(self._edges):
            incidence[u].append(e)
            incidence[v].append(e)
        self._incidence: Tuple[Tuple[int, ...], ...] = tuple(tuple(lst) for lst in incidence)
        self._neighborhoods: Dict[int, FrozenSet[int]] = {}

    # ------------------------------------------------------------------
    # Basic structure
    # ------------------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return self._vertex_count

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Tuple[int, int], ...]:
        return self._edges

    @property
    def incidence(self) -> Tuple[Tuple[int, ...], ...]:
        return self._incidence

    def _check_edge(self, e: int) -> None:
        if not 0 <= e < len(self._edges):
            raise GraphError(f"edge id {e} out of range 0..{len(self._edges) - 1}")

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._vertex_count:
            raise GraphError(f"vertex id {v} out of range 0..{self._vertex_count - 1}")

    def endpoints(self, e: int) -> Tuple[int, int]:
        self._check_edge(e)
        return self._edges[e]

    def other_end(self, e: int, v: int) -> int:
        u, w = self.endpoints(e)
        if v == u:
            return w
        if v == w:
            return u
        raise GraphError(f"vertex {v} is not an endpoint of edge {e}")

    def is_loop(self, e: int) -> bool:
        u, v = self.endpoints(e)
        return u == v

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._incidence[v])

    def incident_edges(self, v: int) -> Tuple[int, ...]:
        """Distinct edges at v in ascending id order"""
        self._check_vertex(v)
        return tuple(sorted(set(self._incidence[v])))

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """Distinct vertices joined to v by a non-loop edge"""
        self._check_vertex(v)
        return tuple(sorted({self.other_end(e, v) for e in self._incidence[v]} - {v}))

    def max_degree(self) -> int:
        if self._vertex_count == 0:
            raise GraphError("maximum degree of an empty graph")
        return max(len(lst) for lst in self._incidence)

    def min_degree_vertex(self) -> Tuple[int, int]:
        """(vertex, degree) of minimum degree, smallest id on ties"""
        if self._vertex_count == 0:
            raise GraphError("minimum degree of an empty graph")
        best = min(range(self._vertex_count), key=lambda v: (len(self._incidence[v]), v))
        return best, len(self._incidence[best])

    def loops(self) -> List[int]:
        return [e for e, (u, v) in enumerate(self._edges) if u == v]

    def parallel_pairs(self) -> List[Tuple[int, int]]:
        """Pairs (first, later) of edges with the same endpoints, in edge id order"""
        first_seen: Dict[FrozenSet[int], int] = {}
        pairs: List[Tuple[int, int]] = []
        for e, (u, v) in enumerate(self._edges):
            if u == v:
                continue
            key = frozenset((u, v))
            if key in first_seen:
                pairs.append((first_seen[key], e))
            else:
                first_seen[key] = e
        return pairs

    def is_simple(self) -> bool:
        return not self.loops() and not self.parallel_pairs()

    def is_regular(self, degree: int) -> bool:
        return all(len(lst) == degree for lst in self._incidence)

    # ------------------------------------------------------------------
    # Distances
    # ------------------------------------------------------------------

    def vertex_distances(self, sources: Iterable[int]) -> List[Distance]:
        """Multi-source BFS distances; unreachable vertices get INFINITE"""
        dist: List[Distance] = [INFINITE] * self._vertex_count
        queue = deque()
        for s in sources:
            self._check_vertex(s)
            if dist[s] != 0:
                dist[s] = 0
                queue.append(s)
        while queue:
            x = queue.popleft()
            for f in self._incidence[x]:
                y = self.other_end(f, x)
                if dist[y] == INFINITE:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def edge_distance(self, e1: int, e2: int) -> Distance:
        """Minimum vertex distance between the endpoints of e1 and e2"""
        self._check_edge(e2)
        if e1 == e2:
            self._check_edge(e1)
            return 0
        dist = self.vertex_distances(set(self.endpoints(e1)))
        return min(dist[u] for u in self._edges[e2])

    def neighborhood(self, e: int) -> FrozenSet[int]:
        """N(e): edges other than e at distance at most one from e"""
        cached = self._neighborhoods.get(e)
        if cached is not None:
            return cached
        closed = set()
        for u in set(self.endpoints(e)):
            closed.add(u)
            closed.update(self.neighbors(u))
        result = set()
        for w in closed:
            result.update(self._incidence[w])
        result.discard(e)
        frozen = frozenset(result)
        self._neighborhoods[e] = frozen
        return frozen

    @cached_property
    def distance_matrix(self) -> np.ndarray:
        """All-pairs vertex distances, np.inf where unreachable"""
        matrix = np.full((self._vertex_count, self._vertex_count), np.inf)
        for v in range(self._vertex_count):
            matrix[v] = self.vertex_distances([v])
        return matrix

    def conflict_graph(self) -> ConflictGraph:
        """Square of the line graph, computed from the distance matrix"""
        m = len(self._edges)
        if m == 0:
            return ConflictGraph(0, ())
        ends = np.array(self._edges, dtype=np.int64)
        a, b = ends[:, 0], ends[:, 1]
        d = self.distance_matrix
        closest = np.minimum(
            np.minimum(d[np.ix_(a, a)], d[np.ix_(a, b)]),
            np.minimum(d[np.ix_(b, a)], d[np.ix_(b, b)]),
        )
        conflicts = closest <= 1
        np.fill_diagonal(conflicts, False)
        adjacency = tuple(frozenset(int(f) for f in np.flatnonzero(conflicts[e])) for e in range(m))
        return ConflictGraph(m, adjacency)

    # ------------------------------------------------------------------
    # Cycles
    # ------------------------------------------------------------------

    def girth_and_witness(self) -> Tuple[Distance, Optional[Cycle]]:
        """Shortest cycle length with a witness; (INFINITE, None) for forests"""
        loops = self.loops()
        if loops:
            e = loops[0]
            return 1, Cycle((self._edges[e][0],), (e,))
        parallel = self.parallel_pairs()
        if parallel:
            e1, e2 = parallel[0]
            return 2, Cycle(self._edges[e1], (e1, e2))

        best: Distance = INFINITE
        witness: Optional[Cycle] = None
        for root in range(self._vertex_count):
            dist: Dict[int, int] = {root: 0}
            parent_edge: Dict[int, int] = {}
            queue = deque([root])
            while queue:
                x = queue.popleft()
                if 2 * dist[x] + 1 >= best:
                    break
                for f in self._incidence[x]:
                    if f == parent_edge.get(x):
                        continue
                    y = self.other_end(f, x)
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        parent_edge[y] = f
                        queue.append(y)
                    elif f != parent_edge.get(y):
                        length = dist[x] + dist[y] + 1
                        if length < best:
                            best = length
                            witness = self._closed_walk(root, x, y, f, parent_edge)
        return best, witness

    def _closed_walk(self, root: int, x: int, y: int, f: int, parent_edge: Dict[int, int]) -> Cycle:
        def climb(v: int) -> Tuple[List[int], List[int]]:
            vertices, edges = [v], []
            while v != root:
                e = parent_edge[v]
                edges.append(e)
                v = self.other_end(e, v)
                vertices.append(v)
            return vertices, edges

        x_vertices, x_edges = climb(x)
        y_vertices, y_edges = climb(y)
        vertices = list(reversed(x_vertices)) + y_vertices[:-1]
        edges = list(reversed(x_edges)) + [f] + y_edges
        return Cycle(tuple(vertices), tuple(edges))

    def cycle_through(self, vertices: Sequence[int]) -> Cycle:
        """The cycle visiting `vertices` in order, using the smallest joining edge ids"""
        used: List[int] = []
        k = len(vertices)
        for i in range(k):
            u, v = vertices[i], vertices[(i + 1) % k]
            joining = [e for e in self._incidence[u] if self.other_end(e, u) == v and e not in used]
            if not joining:
                raise GraphError(f"no unused edge joins {u} and {v}")
            used.append(min(joining))
        return Cycle(tuple(vertices), tuple(used))

    def find_cycle_of_length(self, k: int) -> Optional[Cycle]:
        """Some cycle of length k (3, 4 or 5), deterministic in edge order"""
        if k not in (3, 4, 5):
            raise PreconditionError(f"cycle search supports lengths 3, 4 and 5, got {k}")

        def extend(start: int, vertices: List[int], edges: List[int]) -> Optional[Cycle]:
            x = vertices[-1]
            for f in self._incidence[x]:
                y = self.other_end(f, x)
                if y == x:
                    continue
                if len(vertices) == k:
                    if y == start and f not in edges:
                        return Cycle(tuple(vertices), tuple(edges + [f]))
                    continue
                if y > start and y not in vertices:
                    found = extend(start, vertices + [y], edges + [f])
                    if found is not None:
                        return found
            return None

        for start in range(self._vertex_count):
            found = extend(start, [start], [])
            if found is not None:
                return found
        return None

    # ------------------------------------------------------------------
    # Components and export
    # ------------------------------------------------------------------

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self._vertex_count))
        for e, (u, v) in enumerate(self._edges):
            graph.add_edge(u, v, key=e)
        return graph

    def is_connected(self) -> bool:
        return self._vertex_count > 0 and nx.is_connected(self.to_networkx())

    def components(self) -> List[Component]:
        """Connected components ordered by smallest vertex id"""
        parts = sorted((sorted(c) for c in nx.connected_components(self.to_networkx())), key=lambda c: c[0])
        result = []
        for vertices in parts:
            local = {v: i for i, v in enumerate(vertices)}
            edge_map = tuple(e for e, (u, _) in enumerate(self._edges) if u in local)
            sub = MultiGraph(len(vertices), [(local[self._edges[e][0]], local[self._edges[e][1]]) for e in edge_map])
            result.append(Component(sub, tuple(vertices), edge_map))
        return result

    def __repr__(self) -> str:
        return f"MultiGraph(vertex_count={self._vertex_count}, edges={list(self._edges)})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self._vertex_count == other._vertex_count and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertex_count, self._edges))


def build(vertex_count: int, endpoint_pairs: Sequence[Tuple[int, int]]) -> MultiGraph:
    """Build a multigraph; edge ids follow input order"""
    return MultiGraph(vertex_count, endpoint_pairs)
