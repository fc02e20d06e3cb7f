import pytest

from conftest import complete_graph, cycle_graph, path_graph, random_lists_for
from strongce.config import reset_settings
from strongce.core.coloring import ListAssignment, verify_strong
from strongce.core.graph import MultiGraph
from strongce.engine.base import StructureKind
from strongce.engine.classifier import classify
from strongce.engine.engine import strong_list_color
from strongce.errors import DegreeTooLargeError, FallbackExhausted, PreconditionError
from strongce.tools.generators import (
    CORPUS_KINDS,
    generate_corpus,
    projective_plane_incidence,
    random_tree,
    robertson_graph,
)

# K5 minus 01 and 02, plus a loop at 0 and a second 12
LOOPED = MultiGraph(5, [(0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (0, 0), (1, 2)])
# K5 minus 01 and 23, plus second copies of 02 and 13
DOUBLED = MultiGraph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4), (3, 4), (0, 2), (1, 3)])


def test_classify_low_degree():
    structure = classify(path_graph(3))
    assert structure.kind is StructureKind.LOW_DEGREE
    assert structure.vertex == 0


def test_classify_loop():
    structure = classify(LOOPED)
    assert structure.kind is StructureKind.LOOP
    assert structure.vertex == 0
    assert structure.edges == (8,)
    assert structure.describe() == "LoopAt(v=0, edges=[8])"


def test_classify_parallel_pair():
    structure = classify(DOUBLED)
    assert structure.kind is StructureKind.PARALLEL
    assert structure.edges == (0, 8)
    assert structure.vertex == 0


def test_classify_cycles():
    assert classify(complete_graph(5)).kind is StructureKind.CYCLE3
    assert classify(robertson_graph()).kind is StructureKind.CYCLE5
    structure = classify(projective_plane_incidence())
    assert structure.kind is StructureKind.REGULAR_GIRTH6
    assert structure.vertex == 0


def test_classify_rejects_bad_graphs():
    with pytest.raises(PreconditionError):
        classify(MultiGraph(2, []))
    with pytest.raises(DegreeTooLargeError):
        classify(MultiGraph(6, [(0, i) for i in range(1, 6)]))
    with pytest.raises(PreconditionError):
        classify(MultiGraph(4, [(0, 1), (2, 3)]))


def test_color_random_trees(rng):
    for _ in range(10):
        g = random_tree(int(rng.integers(2, 64)), rng)
        lists = random_lists_for(g, rng)
        outcome = strong_list_color(g, lists)
        assert verify_strong(g, lists, outcome.coloring).ok
        assert outcome.handler == "low_degree"
        assert outcome.fallback_depth == 0


@pytest.mark.parametrize(
    "graph, handler",
    [
        (complete_graph(5), "triangle"),
        (robertson_graph(), "five_cycle"),
        (projective_plane_incidence(), "girth_six"),
        (LOOPED, "loop"),
        (DOUBLED, "parallel"),
    ],
)
def test_dispatch_by_structure(graph, handler, rng):
    lists = random_lists_for(graph, rng)
    outcome = strong_list_color(graph, lists)
    assert verify_strong(graph, lists, outcome.coloring).ok
    assert outcome.handler == handler


def test_disconnected_graph_is_colored_per_component(rng):
    g = MultiGraph(9, [(0, 1), (1, 2), (2, 0), (4, 5), (5, 6), (6, 7), (7, 4)])
    lists = random_lists_for(g, rng)
    outcome = strong_list_color(g, lists)
    assert verify_strong(g, lists, outcome.coloring).ok
    assert outcome.handlers == ["low_degree", "low_degree"]
    assert all(step.edge is None or 0 <= step.edge < g.edge_count for step in outcome.trace)


def test_component_edge_ids_map_back(rng):
    g = MultiGraph(7, [(4, 5), (0, 1), (5, 6), (1, 2)])
    lists = random_lists_for(g, rng)
    outcome = strong_list_color(g, lists)
    assert verify_strong(g, lists, outcome.coloring).ok
    assert sorted(check.edge for check in outcome.bound_checks) == [0, 1, 2, 3]


def test_edgeless_graph():
    outcome = strong_list_color(MultiGraph(3, []), ListAssignment([]))
    assert outcome.coloring == []
    assert outcome.handler == "none"


def test_lists_are_cut_to_22_colors(rng):
    g = cycle_graph(7)
    lists = random_lists_for(g, rng, k=30, palette=60)
    outcome = strong_list_color(g, lists)
    for e, color in enumerate(outcome.coloring):
        assert color in lists[e][:22]


def test_short_lists_need_allow_short():
    g = cycle_graph(6)
    lists = ListAssignment.uniform(6, 3)
    with pytest.raises(PreconditionError):
        strong_list_color(g, lists)
    outcome = strong_list_color(g, lists, allow_short=True)
    assert verify_strong(g, lists, outcome.coloring).ok
    assert outcome.handler == "fallback"


def test_short_lists_can_be_impossible():
    with pytest.raises(FallbackExhausted):
        strong_list_color(cycle_graph(5), ListAssignment.uniform(5, 4), allow_short=True)


def test_list_size_from_environment(monkeypatch):
    monkeypatch.setenv("STRONGCE_LIST_SIZE", "21")
    reset_settings()
    g = path_graph(4)
    outcome = strong_list_color(g, ListAssignment.uniform(4, 21))
    assert verify_strong(g, ListAssignment.uniform(4, 21), outcome.coloring).ok


def test_degree_five_is_rejected():
    g = MultiGraph(6, [(0, i) for i in range(1, 6)])
    with pytest.raises(DegreeTooLargeError):
        strong_list_color(g, ListAssignment.uniform(5, 22))


def test_seeded_corpus_colors_without_deep_fallback():
    corpus = generate_corpus(500, seed=11)
    assert {name.split("-", 1)[1] for name, _, _ in corpus} == set(CORPUS_KINDS)
    handlers = set()
    for name, graph, lists in corpus:
        outcome = strong_list_color(graph, lists, seed=11)
        assert verify_strong(graph, lists, outcome.coloring).ok, name
        assert outcome.fallback_depth <= 1, name
        assert not outcome.bound_misses, name
        handlers.update(outcome.handlers)
    assert {"low_degree", "parallel", "triangle", "four_cycle", "five_cycle", "girth_six"} <= handlers
