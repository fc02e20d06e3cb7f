import pytest

from strongce.core.graph import MultiGraph
from strongce.errors import PreconditionError
from strongce.tools.generators import (
    CORPUS_LIST_SIZE,
    FIXTURE_CYCLES,
    FIXTURES,
    cage,
    complete_bipartite_44,
    corpus_instance,
    fixture,
    generate_corpus,
    generate_graph,
    generate_lists,
    hypercube_q4,
    make_rng,
    pad_to_regular4,
    projective_plane_incidence,
    random_lists,
    random_doubled_regular4,
    random_maxdeg4,
    random_regular4,
    random_tree,
    robertson_graph,
    sidon_incidence,
)


def test_random_regular4_is_simple_and_regular(rng):
    for n in (5, 9, 20, 41):
        g = random_regular4(n, rng)
        assert g.is_simple()
        assert g.is_regular(4)
        assert g.edge_count == 2 * n
    with pytest.raises(PreconditionError):
        random_regular4(4, rng)


def test_random_doubled_regular4_has_a_parallel_pair(rng):
    for n in (6, 13, 40):
        g = random_doubled_regular4(n, rng)
        assert g.is_regular(4)
        assert not g.loops()
        assert g.parallel_pairs()
        assert g.edge_count == 2 * n


def test_random_maxdeg4_respects_degree(rng):
    for _ in range(20):
        g = random_maxdeg4(int(rng.integers(1, 30)), rng)
        assert g.max_degree() <= 4


def test_random_tree(rng):
    g = random_tree(30, rng)
    assert g.edge_count == 29
    assert g.is_connected()
    assert g.max_degree() <= 4


def test_robertson_graph_is_the_4_5_cage():
    g = robertson_graph()
    assert g.vertex_count == 19
    assert g.is_simple()
    assert g.is_regular(4)
    assert g.girth_and_witness()[0] == 5


def test_girth_six_families():
    plane = projective_plane_incidence()
    assert (plane.vertex_count, plane.edge_count) == (26, 52)
    assert plane.is_regular(4)
    assert plane.girth_and_witness()[0] == 6
    sidon = sidon_incidence(15)
    assert sidon.is_regular(4)
    assert sidon.girth_and_witness()[0] >= 6
    with pytest.raises(PreconditionError):
        sidon_incidence(14)


def test_cage_sizes():
    assert cage(19) == robertson_graph()
    assert cage(26) == projective_plane_incidence()
    assert cage(30).vertex_count == 30
    with pytest.raises(PreconditionError):
        cage(20)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixtures_have_maximum_degree_four(name):
    g = fixture(name)
    assert g.max_degree() <= 4
    assert g.is_connected()


@pytest.mark.parametrize("name", sorted(FIXTURE_CYCLES))
def test_four_cycle_fixtures_are_triangle_free_and_regular(name):
    g = fixture(name)
    assert g.is_simple()
    assert g.is_regular(4)
    assert g.find_cycle_of_length(3) is None
    assert len(g.cycle_through(FIXTURE_CYCLES[name])) == 4


def test_padding_keeps_the_core():
    core = complete_bipartite_44()
    assert pad_to_regular4(core).edge_count == 10 * core.edge_count
    with pytest.raises(PreconditionError):
        pad_to_regular4(MultiGraph(2, [(0, 1), (0, 1)]))


def test_hypercube():
    g = hypercube_q4()
    assert g.is_regular(4)
    assert g.edge_count == 32


def test_unknown_names():
    with pytest.raises(PreconditionError):
        fixture("petersen")
    with pytest.raises(PreconditionError):
        generate_graph("erdos", 10, make_rng(0))


def test_generate_graph_models():
    rng = make_rng(3)
    assert generate_graph("regular4", 12, rng).is_regular(4)
    assert generate_graph("tree", 12, rng).edge_count == 11
    assert generate_graph("cage", 19, rng) == robertson_graph()
    assert generate_graph("fixture:q4", 0, rng) == hypercube_q4()


def test_generate_lists():
    rng = make_rng(5)
    uniform = generate_lists("uniform:4", 3, rng)
    assert list(uniform) == [(1, 2, 3, 4)] * 3
    drawn = generate_lists("random:5:9", 10, rng)
    assert all(len(lst) == 5 and list(lst) == sorted(lst) and 1 <= min(lst) and max(lst) <= 9 for lst in drawn)
    for spec in ("uniform", "random:5", "gauss:3", "uniform:x"):
        with pytest.raises(PreconditionError):
            generate_lists(spec, 3, rng)
    with pytest.raises(PreconditionError):
        random_lists(3, 10, 5, rng)


def test_generation_is_seed_deterministic():
    first = generate_corpus(12, seed=42)
    second = generate_corpus(12, seed=42)
    assert first == second
    assert random_regular4(20, make_rng(1)) == random_regular4(20, make_rng(1))


def test_corpus_instances_stay_small():
    rng = make_rng(8)
    for index in range(30):
        name, graph, lists = corpus_instance(index, rng)
        assert name.startswith(f"{index:04d}-")
        assert graph.vertex_count <= 64
        assert graph.max_degree() <= 4
        assert lists.min_size() == CORPUS_LIST_SIZE
        if name.endswith("-parallel"):
            assert graph.parallel_pairs() and not graph.loops()
