"""Seeded graph and list generators: random models, cages and hand-built fixtures"""
from collections import defaultdict
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from strongce.core.coloring import ListAssignment
from strongce.core.graph import MultiGraph
from strongce.errors import PreconditionError

Edge = Tuple[int, int]

# Hamiltonian cycle offsets of the Robertson graph, the (4,5)-cage
ROBERTSON_CHORDS = (8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4)
# Perfect difference set mod 13: the lines of the projective plane of order 3
PLANE_OF_ORDER_THREE = (0, 1, 3, 9)
# Sidon set, its differences are distinct modulo every m >= 15
SIDON_SET = (0, 1, 3, 7)
# Circulant offsets joining the copies of a vertex with deficiency 1..4
PADDING_COPIES = 10
PADDING_OFFSETS = {1: (5,), 2: (1, 9), 3: (1, 9, 5), 4: (1, 9, 3, 7)}


def make_rng(seed: Optional[int]) -> np.random.Generator:
    return np.random.default_rng(seed)


# ----------------------------------------------------------------------
# Random models
# ----------------------------------------------------------------------

def random_regular4(n: int, rng: np.random.Generator) -> MultiGraph:
    """Simple 4-regular graph by the pairing model, rejecting loops and repeated pairs"""
    if n < 5:
        raise PreconditionError(f"a simple 4-regular graph needs at least 5 vertices, got {n}")

    def suitable(edges: Set[Edge], potential: Dict[int, int]) -> bool:
        # False when every leftover stub pair would repeat an edge
        if not potential:
            return True
        for s1 in potential:
            for s2 in potential:
                if s1 == s2:
                    break
                if (min(s1, s2), max(s1, s2)) not in edges:
                    return True
        return False

    def try_creation() -> Optional[Set[Edge]]:
        edges: Set[Edge] = set()
        stubs = list(range(n)) * 4
        while stubs:
            potential: Dict[int, int] = defaultdict(int)
            rng.shuffle(stubs)
            it = iter(stubs)
            for s1, s2 in zip(it, it):
                s1, s2 = min(s1, s2), max(s1, s2)
                if s1 != s2 and (s1, s2) not in edges:
                    edges.add((s1, s2))
                else:
                    potential[s1] += 1
                    potential[s2] += 1
            if not suitable(edges, potential):
                return None
            stubs = [node for node, count in potential.items() for _ in range(count)]
        return edges

    edges = try_creation()
    while edges is None:
        edges = try_creation()
    return MultiGraph(n, sorted(edges))


def random_maxdeg4(n: int, rng: np.random.Generator, edge_target: Optional[int] = None) -> MultiGraph:
    """Multigraph with loops and parallel edges allowed, maximum degree at most 4"""
    if n < 1:
        raise PreconditionError("need at least one vertex")
    target = edge_target if edge_target is not None else int(rng.integers(n, 2 * n + 1))
    degree = [0] * n
    edges: List[Edge] = []
    for _ in range(20 * target):
        if len(edges) >= target:
            break
        u, v = (int(x) for x in rng.integers(n, size=2))
        if u == v:
            if degree[u] <= 2:
                degree[u] += 2
                edges.append((u, u))
        elif degree[u] < 4 and degree[v] < 4:
            degree[u] += 1
            degree[v] += 1
            edges.append((min(u, v), max(u, v)))
    return MultiGraph(n, edges)


def random_doubled_regular4(n: int, rng: np.random.Generator) -> MultiGraph:
    """Loopless 4-regular multigraph with a parallel pair.

    Starts from a simple 4-regular graph, takes an edge ab, and swaps ax and
    by for a second ab and xy. Degrees stay at 4.
    """
    g = random_regular4(n, rng)
    a, b = g.edges[int(rng.integers(g.edge_count))]
    ax = next(e for e in g.incident_edges(a) if g.other_end(e, a) != b)
    x = g.other_end(ax, a)
    by = next(e for e in g.incident_edges(b) if g.other_end(e, b) not in (a, x))
    y = g.other_end(by, b)
    kept = [edge for e, edge in enumerate(g.edges) if e not in (ax, by)]
    return MultiGraph(n, kept + [(a, b), (x, y)])


def random_tree(n: int, rng: np.random.Generator) -> MultiGraph:
    """Random tree with maximum degree at most 4"""
    degree = [0] * n
    edges: List[Edge] = []
    for v in range(1, n):
        open_slots = [u for u in range(v) if degree[u] < 4]
        u = open_slots[int(rng.integers(len(open_slots)))]
        degree[u] += 1
        degree[v] += 1
        edges.append((u, v))
    return MultiGraph(n, edges)


# ----------------------------------------------------------------------
# Cages and girth-6 families
# ----------------------------------------------------------------------

def robertson_graph() -> MultiGraph:
    n = len(ROBERTSON_CHORDS)
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, (i + step) % n) for i, step in enumerate(ROBERTSON_CHORDS)]
    return MultiGraph(n, [(min(u, v), max(u, v)) for u, v in edges])


def _difference_incidence(modulus: int, differences: Sequence[int]) -> MultiGraph:
    """Points 0..m-1, lines m..2m-1; line j holds the points j + d"""
    edges = [(p, modulus + j) for j in range(modulus) for p in sorted((j + d) % modulus for d in differences)]
    return MultiGraph(2 * modulus, edges)


def projective_plane_incidence() -> MultiGraph:
    """The (4,6)-cage: 26 vertices, 52 edges"""
    return _difference_incidence(13, PLANE_OF_ORDER_THREE)


def sidon_incidence(m: int) -> MultiGraph:
    """4-regular bipartite graph of girth at least 6 on 2m vertices"""
    if m < 15:
        raise PreconditionError(f"the Sidon construction needs m >= 15, got {m}")
    return _difference_incidence(m, SIDON_SET)


def cage(n: int) -> MultiGraph:
    """(4,5)-cage for n = 19, (4,6)-cage for n = 26, Sidon incidence graph for even n >= 30"""
    if n == 19:
        return robertson_graph()
    if n == 26:
        return projective_plane_incidence()
    if n >= 30 and n % 2 == 0:
        return sidon_incidence(n // 2)
    raise PreconditionError(f"no 4-regular cage construction for n = {n}")


# ----------------------------------------------------------------------
# Fixtures
# ----------------------------------------------------------------------

def pad_to_regular4(core: MultiGraph) -> MultiGraph:
    """4-regular simple graph with `core` as copy 0.

    Takes ten copies of a simple core and joins the copies of each vertex by
    a circulant with odd offsets sized to its missing degree. Odd offsets
    create no triangles and keep a bipartite core bipartite.
    """
    if not core.is_simple() or core.max_degree() > 4:
        raise PreconditionError("padding needs a simple core with maximum degree at most 4")
    n = core.vertex_count
    edges: List[Edge] = []
    for copy in range(PADDING_COPIES):
        edges.extend((u + copy * n, v + copy * n) for u, v in core.edges)
    for v in range(n):
        missing = 4 - core.degree(v)
        if missing == 0:
            continue
        seen: Set[Edge] = set()
        for copy, offset in product(range(PADDING_COPIES), PADDING_OFFSETS[missing]):
            a, b = copy, (copy + offset) % PADDING_COPIES
            pair = (min(a, b) * n + v, max(a, b) * n + v)
            if pair not in seen:
                seen.add(pair)
                edges.append(pair)
    return MultiGraph(n * PADDING_COPIES, edges)


def fig1_witness() -> MultiGraph:
    """Edge 0 = (0, 1) with |N(0)| = 24, the most a maximum-degree-4 graph allows"""
    edges: List[Edge] = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)]
    leaf = 8
    for middle in range(2, 8):
        for _ in range(3):
            edges.append((middle, leaf))
            leaf += 1
    return MultiGraph(leaf, edges)


def complete_bipartite_44() -> MultiGraph:
    return MultiGraph(8, [(a, 4 + b) for a in range(4) for b in range(4)])


def hypercube_q4() -> MultiGraph:
    return MultiGraph(16, [(v, v ^ (1 << bit)) for v in range(16) for bit in range(4) if v < v ^ (1 << bit)])


def four_cycle_one_pair() -> MultiGraph:
    """4-cycle 0-1-2-3 whose pendants at 0 and 2 meet at vertex 4; all other far ends distinct"""
    core = MultiGraph(11, [(0, 1), (1, 2), (2, 3), (0, 3),
                           (0, 4), (0, 5), (2, 4), (2, 6),
                           (1, 7), (1, 8), (3, 9), (3, 10)])
    return pad_to_regular4(core)


def four_cycle_no_pairs() -> MultiGraph:
    """4-cycle 0-1-2-3 with eight distinct far ends 4..11 and no edges among them"""
    core = MultiGraph(12, [(0, 1), (1, 2), (2, 3), (0, 3),
                           (0, 4), (0, 5), (1, 6), (1, 7),
                           (2, 8), (2, 9), (3, 10), (3, 11)])
    return pad_to_regular4(core)


def four_cycle_diagonals() -> MultiGraph:
    """4-cycle 0-1-2-3 with far ends 4, 5 at vertex 0 and 6, 7 at vertex 2 joined completely"""
    core = MultiGraph(12, [(0, 1), (1, 2), (2, 3), (0, 3),
                           (0, 4), (0, 5), (2, 6), (2, 7),
                           (4, 6), (4, 7), (5, 6), (5, 7),
                           (1, 8), (1, 9), (3, 10), (3, 11)])
    return pad_to_regular4(core)


def triangle_padded() -> MultiGraph:
    return pad_to_regular4(MultiGraph(3, [(0, 1), (1, 2), (0, 2)]))


def loop_saturated() -> MultiGraph:
    """A loop at vertex 0 whose two other neighbors and their neighbors all have degree 4"""
    edges: List[Edge] = [(0, 0), (0, 1), (0, 2)]
    leaf = 3
    for middle in (1, 2):
        for _ in range(3):
            edges.append((middle, leaf))
            leaf += 1
    for inner in range(3, leaf):
        for _ in range(3):
            edges.append((inner, leaf))
            leaf += 1
    return MultiGraph(leaf, edges)


FIXTURES: Dict[str, Callable[[], MultiGraph]] = {
    "fig1-witness": fig1_witness,
    "cage-4-5": robertson_graph,
    "cage-4-6": projective_plane_incidence,
    "k44": complete_bipartite_44,
    "q4": hypercube_q4,
    "four-cycle-one-pair": four_cycle_one_pair,
    "four-cycle-no-pairs": four_cycle_no_pairs,
    "four-cycle-diagonals": four_cycle_diagonals,
    "triangle-padded": triangle_padded,
    "loop-saturated": loop_saturated,
}

# 4-cycle fixtures and the cycle they are built around
FIXTURE_CYCLES: Dict[str, Tuple[int, ...]] = {
    "k44": (0, 4, 1, 5),
    "q4": (0, 1, 3, 2),
    "four-cycle-one-pair": (0, 1, 2, 3),
    "four-cycle-no-pairs": (0, 1, 2, 3),
    "four-cycle-diagonals": (0, 1, 2, 3),
}


def fixture(name: str) -> MultiGraph:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise PreconditionError(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}") from None


def generate_graph(model: str, n: int, rng: np.random.Generator) -> MultiGraph:
    """Graph for a --model value: regular4, random-maxdeg4, tree, cage or fixture:<name>"""
    if model.startswith("fixture:"):
        return fixture(model.split(":", 1)[1])
    if model == "regular4":
        return random_regular4(n, rng)
    if model == "random-maxdeg4":
        return random_maxdeg4(n, rng)
    if model == "tree":
        return random_tree(n, rng)
    if model == "cage":
        return cage(n)
    raise PreconditionError(f"unknown graph model {model!r}")


# ----------------------------------------------------------------------
# Lists
# ----------------------------------------------------------------------

def uniform_lists(edge_count: int, k: int) -> ListAssignment:
    return ListAssignment.uniform(edge_count, k)


def random_lists(edge_count: int, k: int, palette: int, rng: np.random.Generator) -> ListAssignment:
    """k distinct colors per edge drawn from 1..palette, in increasing order"""
    if k > palette:
        raise PreconditionError(f"cannot draw {k} distinct colors from a palette of {palette}")
    return ListAssignment(
        sorted(int(c) + 1 for c in rng.choice(palette, size=k, replace=False)) for _ in range(edge_count)
    )


def generate_lists(spec: str, edge_count: int, rng: np.random.Generator) -> ListAssignment:
    """Lists for a --lists value: uniform:k or random:k:palette"""
    parts = spec.split(":")
    try:
        if parts[0] == "uniform" and len(parts) == 2:
            return uniform_lists(edge_count, int(parts[1]))
        if parts[0] == "random" and len(parts) == 3:
            return random_lists(edge_count, int(parts[1]), int(parts[2]), rng)
    except ValueError:
        pass
    raise PreconditionError(f"bad list specification {spec!r}; use uniform:k or random:k:palette")


# ----------------------------------------------------------------------
# Corpus
# ----------------------------------------------------------------------

CORPUS_KINDS = ("tree", "multigraph", "parallel", "regular4", "girth6", "cage-4-5", "four-cycle")
CORPUS_LIST_SIZE = 22
CORPUS_PALETTE = 66


def corpus_instance(index: int, rng: np.random.Generator) -> Tuple[str, MultiGraph, ListAssignment]:
    """One seeded corpus instance, cycling through the structure mix; n <= 64"""
    kind = CORPUS_KINDS[index % len(CORPUS_KINDS)]
    if kind == "tree":
        graph = random_tree(int(rng.integers(2, 65)), rng)
    elif kind == "multigraph":
        graph = random_maxdeg4(int(rng.integers(2, 65)), rng)
    elif kind == "parallel":
        graph = random_doubled_regular4(int(rng.integers(6, 65)), rng)
    elif kind == "regular4":
        graph = random_regular4(int(rng.integers(6, 65)), rng)
    elif kind == "girth6":
        graph = sidon_incidence(int(rng.integers(15, 33))) if rng.random() < 0.75 else projective_plane_incidence()
    elif kind == "cage-4-5":
        graph = robertson_graph()
    else:
        graph = [complete_bipartite_44, hypercube_q4][int(rng.integers(2))]()
    lists = random_lists(graph.edge_count, CORPUS_LIST_SIZE, CORPUS_PALETTE, rng)
    return f"{index:04d}-{kind}", graph, lists


def generate_corpus(count: int, seed: int) -> List[Tuple[str, MultiGraph, ListAssignment]]:
    rng = make_rng(seed)
    return [corpus_instance(index, rng) for index in range(count)]
