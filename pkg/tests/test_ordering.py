import pytest

from conftest import complete_graph, random_lists_for
from strongce.core.coloring import ListAssignment, verify_strong
from strongce.core.graph import MultiGraph
from strongce.errors import DegreeTooLargeError, PreconditionError
from strongce.services.ordering import (
    BOUND_ALL_BUT_CORE,
    BOUND_WITH_PRECOLORED,
    color_all_but_cycle,
    color_all_but_vertex,
    color_with_precolored,
    compatible_order_cycle,
    compatible_order_vertex,
    greedy_color,
    pendant_sets,
)
from strongce.tools.generators import projective_plane_incidence, random_regular4, robertson_graph


def _connected_regular4(rng, count):
    graphs = []
    while len(graphs) < count:
        g = random_regular4(int(rng.integers(6, 40)), rng)
        if g.is_connected():
            graphs.append(g)
    return graphs


def test_vertex_order_is_farthest_first():
    g = robertson_graph()
    order = compatible_order_vertex(g, 0)
    assert set(order) == set(range(g.edge_count)) - set(g.incident_edges(0))
    classes = [order.distance_class[e] for e in order]
    assert classes == sorted(classes, reverse=True)
    assert classes[-1] == 1


def test_cycle_order_excludes_cycle_edges():
    g = robertson_graph()
    cycle = g.find_cycle_of_length(5)
    order = compatible_order_cycle(g, cycle)
    assert not set(order) & set(cycle.edges)
    assert len(order) == g.edge_count - 5
    assert min(order.distance_class.values()) == 0


def test_shuffled_ties_keep_the_distance_classes(rng):
    g = robertson_graph()
    plain = compatible_order_vertex(g, 3)
    shuffled = compatible_order_vertex(g, 3, rng)
    assert sorted(plain) == sorted(shuffled)
    assert [plain.distance_class[e] for e in plain] == [shuffled.distance_class[e] for e in shuffled]


def test_order_without_drops_edges():
    order = compatible_order_vertex(robertson_graph(), 0)
    dropped = order.edges[:3]
    smaller = order.without(dropped)
    assert len(smaller) == len(order) - 3
    assert smaller.excluded >= set(dropped)


def test_greedy_reports_stuck_edge():
    g = complete_graph(3)
    result = greedy_color(g, ListAssignment([[1], [1], [1]]), [0, 1, 2])
    assert not result.success
    assert result.stuck_edge == 1
    assert result.coloring.color_of(0) == 1


def test_all_but_vertex_on_random_regular_graphs(rng):
    for g in _connected_regular4(rng, 12):
        v = int(rng.integers(g.vertex_count))
        lists = random_lists_for(g, rng, k=21, palette=45)
        result = color_all_but_vertex(g, lists, v)
        assert result.success
        assert result.peak_colored_neighbors <= BOUND_ALL_BUT_CORE
        assert set(result.coloring.uncolored_edges()) == set(g.incident_edges(v))
        assert verify_strong(g, lists, result.coloring.as_list(), allow_uncolored=True).ok


def test_all_but_cycle_on_random_regular_graphs(rng):
    checked = 0
    for g in _connected_regular4(rng, 12):
        _, cycle = g.girth_and_witness()
        if cycle is None or len(cycle) < 3:
            continue
        lists = random_lists_for(g, rng, k=21, palette=45)
        result = color_all_but_cycle(g, lists, cycle)
        assert result.peak_colored_neighbors <= BOUND_ALL_BUT_CORE
        assert set(result.coloring.uncolored_edges()) == set(cycle.edges)
        checked += 1
    assert checked


def test_all_but_cycle_keeps_extra_edges_uncolored():
    g = robertson_graph()
    cycle = g.find_cycle_of_length(5)
    extra = [e for e in g.incident_edges(cycle.vertices[0]) if e not in cycle.edges]
    result = color_all_but_cycle(g, ListAssignment.uniform(g.edge_count, 21), cycle, extra_uncolored=extra)
    assert set(result.coloring.uncolored_edges()) == set(cycle.edges) | set(extra)


def test_greedy_completion_preconditions():
    g = robertson_graph()
    with pytest.raises(PreconditionError):
        color_all_but_vertex(g, ListAssignment.uniform(g.edge_count, 20), 0)
    star = MultiGraph(6, [(0, i) for i in range(1, 6)])
    with pytest.raises(DegreeTooLargeError):
        color_all_but_vertex(star, ListAssignment.uniform(5, 21), 0)
    split = MultiGraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    with pytest.raises(PreconditionError):
        color_all_but_vertex(split, ListAssignment.uniform(6, 21), 0)


def test_pendant_sets_on_girth_six_graph():
    g = projective_plane_incidence()
    sets = pendant_sets(g, 0)
    assert [e for e, _ in sets] == list(g.incident_edges(0))
    members = [f for _, a_set in sets for f in a_set]
    assert len(members) == 12
    assert len(set(members)) == 12


def test_precolored_completion_on_girth_six_graph():
    g = projective_plane_incidence()
    lists = ListAssignment.uniform(g.edge_count, 22)
    precolored = {a_set[0]: i + 1 for i, (_, a_set) in enumerate(pendant_sets(g, 0))}
    result = color_with_precolored(g, lists, 0, precolored)
    assert result.peak_colored_neighbors <= BOUND_WITH_PRECOLORED
    assert set(result.coloring.uncolored_edges()) == set(g.incident_edges(0))
    for f, color in precolored.items():
        assert result.coloring.color_of(f) == color


def test_precolored_completion_rejects_bad_input():
    g = projective_plane_incidence()
    lists = ListAssignment.uniform(g.edge_count, 22)
    sets = pendant_sets(g, 0)
    twice = {sets[0][1][0]: 1, sets[0][1][1]: 2, sets[1][1][0]: 3, sets[2][1][0]: 4}
    with pytest.raises(PreconditionError):
        color_with_precolored(g, lists, 0, twice)
    r = robertson_graph()
    r_sets = pendant_sets(r, 0)
    with pytest.raises(PreconditionError):
        color_with_precolored(r, ListAssignment.uniform(r.edge_count, 22), 0,
                              {a_set[0]: i + 1 for i, (_, a_set) in enumerate(r_sets)})
