"""Structure classification: the first structure present, in priority order"""
from strongce.core.graph import MultiGraph
from strongce.engine.base import StructureClass, StructureKind
from strongce.errors import DegreeTooLargeError, PreconditionError

_CYCLE_KINDS = {3: StructureKind.CYCLE3, 4: StructureKind.CYCLE4, 5: StructureKind.CYCLE5}


def classify(graph: MultiGraph) -> StructureClass:
    """Classify a connected graph with maximum degree at most 4.

    Order: a vertex of degree < 4, a loop, a parallel pair, then cycles of
    length 3, 4 and 5; a graph with none of these is 4-regular, simple and
    of girth at least 6, and vertex 0 is its center.
    """
    if graph.edge_count == 0:
        raise PreconditionError("cannot classify a graph without edges")
    if graph.max_degree() > 4:
        raise DegreeTooLargeError(f"maximum degree {graph.max_degree()} exceeds 4")
    if not graph.is_connected():
        raise PreconditionError("classification needs a connected graph")

    v, degree = graph.min_degree_vertex()
    if degree < 4:
        return StructureClass(StructureKind.LOW_DEGREE, vertex=v)

    loops = graph.loops()
    if loops:
        e = loops[0]
        return StructureClass(StructureKind.LOOP, vertex=graph.endpoints(e)[0], edges=(e,))

    parallel = graph.parallel_pairs()
    if parallel:
        e1, e2 = parallel[0]
        return StructureClass(StructureKind.PARALLEL, vertex=min(graph.endpoints(e1)), edges=(e1, e2))

    for length, kind in _CYCLE_KINDS.items():
        cycle = graph.find_cycle_of_length(length)
        if cycle is not None:
            return StructureClass(kind, cycle=cycle)

    return StructureClass(StructureKind.REGULAR_GIRTH6, vertex=0)
