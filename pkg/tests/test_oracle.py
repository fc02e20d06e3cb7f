import pytest

from conftest import complete_graph, cycle_graph, path_graph, star_graph
from strongce.core.coloring import ListAssignment, PartialColoring, verify_strong
from strongce.errors import LimitExceeded, PreconditionError
from strongce.services.oracle import (
    SearchConfig,
    enumerate_strong_chromatic_index,
    exact_strong_chromatic_index,
    extend_coloring,
    is_strongly_k_colorable,
    list_colorable,
)
from strongce.tools.generators import random_maxdeg4


def _cycle_index(n):
    if n % 3 == 0:
        return 3
    return 5 if n == 5 else 4


@pytest.mark.parametrize("n", range(3, 13))
def test_cycles(n):
    assert exact_strong_chromatic_index(cycle_graph(n)) == _cycle_index(n)


def test_small_trees_and_cliques():
    assert exact_strong_chromatic_index(path_graph(3)) == 3
    assert exact_strong_chromatic_index(star_graph(4)) == 4
    assert exact_strong_chromatic_index(complete_graph(5)) == 10
    assert exact_strong_chromatic_index(path_graph(0)) == 0


def test_static_heuristic_gives_the_same_answers():
    config = SearchConfig(heuristic="static")
    for n in (5, 7, 8):
        assert exact_strong_chromatic_index(cycle_graph(n), config) == _cycle_index(n)


def test_agrees_with_plain_enumeration(rng):
    for _ in range(15):
        g = random_maxdeg4(int(rng.integers(2, 8)), rng, edge_target=int(rng.integers(1, 10)))
        assert exact_strong_chromatic_index(g) == enumerate_strong_chromatic_index(g)


def test_plain_enumeration_is_limited():
    with pytest.raises(PreconditionError):
        enumerate_strong_chromatic_index(cycle_graph(20))


def test_list_colorable_finds_c6_coloring():
    g = cycle_graph(6)
    lists = ListAssignment.uniform(6, 3)
    coloring = list_colorable(g, lists)
    assert coloring is not None
    assert verify_strong(g, lists, coloring).ok


def test_list_colorable_reports_impossible_c5():
    assert list_colorable(cycle_graph(5), ListAssignment.uniform(5, 4)) is None


def test_k_colorability():
    assert is_strongly_k_colorable(cycle_graph(7), 4)
    assert not is_strongly_k_colorable(cycle_graph(7), 3)
    assert not is_strongly_k_colorable(cycle_graph(7), 0)
    assert is_strongly_k_colorable(path_graph(0), 0)


def test_extend_coloring_respects_colored_edges():
    g = path_graph(3)
    coloring = PartialColoring(g, ListAssignment.uniform(3, 3))
    coloring.assign(0, 2)
    assignment = extend_coloring(coloring, [1, 2])
    assert assignment is not None
    assert 2 not in assignment.values()
    stuck = PartialColoring(g, ListAssignment([[1], [1], [1]]))
    stuck.assign(0, 1)
    assert extend_coloring(stuck, [1, 2]) is None


def test_node_limit_is_enforced():
    with pytest.raises(LimitExceeded):
        exact_strong_chromatic_index(cycle_graph(7), SearchConfig(node_limit=1))


def test_search_config_validation():
    with pytest.raises(PreconditionError):
        SearchConfig(node_limit=0)
    with pytest.raises(PreconditionError):
        SearchConfig(heuristic="random")
