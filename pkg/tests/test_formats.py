import pytest

from strongce.core.coloring import ListAssignment
from strongce.core.graph import MultiGraph
from strongce.errors import FormatError
from strongce.tools.formats import (
    parse_coloring,
    parse_factors,
    parse_graph,
    parse_lists,
    parse_monomial,
    read_graph,
    serialize_coloring,
    serialize_graph,
    serialize_lists,
    write_text,
)

GRAPH_TEXT = """\
strongce v1
# a triangle with a loop
n 3
0 1
1 2
2 0   # closing edge
1 1
"""


def test_parse_graph_keeps_edge_order():
    g = parse_graph(GRAPH_TEXT)
    assert g.vertex_count == 3
    assert g.edges == ((0, 1), (1, 2), (2, 0), (1, 1))
    assert parse_graph(serialize_graph(g)) == g


def test_serialize_graph_layout():
    assert serialize_graph(MultiGraph(2, [(0, 1)])) == "strongce v1\nn 2\n0 1\n"


@pytest.mark.parametrize(
    "text, line",
    [
        ("n 3\n0 1\n", 1),
        ("strongce v1\nm 3\n", 2),
        ("strongce v1\nn 3\n0 1 2\n", 3),
        ("strongce v1\nn 3\n0 x\n", 3),
        ("strongce v1\nn 3\n\n0 3\n", 4),
        ("strongce v1\nn -1\n", 2),
    ],
)
def test_parse_graph_errors_carry_line_numbers(text, line):
    with pytest.raises(FormatError) as info:
        parse_graph(text)
    assert info.value.line == line


def test_parse_graph_rejects_empty_input():
    with pytest.raises(FormatError):
        parse_graph("")


def test_lists_round_trip():
    lists = ListAssignment([[3, 1, 2], [7]])
    text = serialize_lists(lists)
    assert text == "0 : 1 2 3\n1 : 7\n"
    assert parse_lists(text) == ListAssignment([[1, 2, 3], [7]])


def test_parse_lists_checks_order_and_coverage():
    with pytest.raises(FormatError) as info:
        parse_lists("0 : 1 2\n1 : 3 3\n")
    assert info.value.line == 2
    with pytest.raises(FormatError):
        parse_lists("0 : 1 2\n", edge_count=2)
    with pytest.raises(FormatError):
        parse_lists("0 : 1\n1 : 2\n", edge_count=1)
    with pytest.raises(FormatError):
        parse_lists("0 1 2\n")
    with pytest.raises(FormatError):
        parse_lists("0 : 1\n0 : 2\n")


def test_lists_may_come_in_any_edge_order():
    assert parse_lists("1 : 4 5\n0 : 1\n") == ListAssignment([[1], [4, 5]])


def test_coloring_round_trip_with_gaps():
    text = serialize_coloring([4, None, 2])
    assert text == "0 4\n2 2\n"
    assert parse_coloring(text) == [4, None, 2]
    assert parse_coloring(text, edge_count=4) == [4, None, 2, None]
    assert parse_coloring("") == []


def test_parse_coloring_errors():
    with pytest.raises(FormatError):
        parse_coloring("0 1\n0 2\n")
    with pytest.raises(FormatError):
        parse_coloring("5 1\n", edge_count=3)
    with pytest.raises(FormatError):
        parse_coloring("0\n")


def test_write_text_creates_directories(tmp_path):
    target = tmp_path / "nested" / "dir" / "g.graph"
    write_text(target, serialize_graph(MultiGraph(2, [(0, 1)])))
    assert read_graph(target).edges == ((0, 1),)


def test_parse_factors():
    assert parse_factors("1 2\nx1 - x3\n# comment\n2 3\n") == [(0, 1), (0, 2), (1, 2)]
    with pytest.raises(FormatError):
        parse_factors("1 1\n")
    with pytest.raises(FormatError):
        parse_factors("0 1\n")
    with pytest.raises(FormatError):
        parse_factors("1 2 3\n")


@pytest.mark.parametrize(
    "spec, expected",
    [
        ("x1^2 x3", (2, 0, 1)),
        ("x1x2", (1, 1, 0)),
        ("x2*x2", (0, 2, 0)),
        ("2,0,1", (2, 0, 1)),
        ("1 1", (1, 1, 0)),
    ],
)
def test_parse_monomial(spec, expected):
    assert parse_monomial(spec, 3) == expected


@pytest.mark.parametrize("spec", ["x4", "y1", "1,2,3,4", "a,b"])
def test_parse_monomial_errors(spec):
    with pytest.raises(FormatError):
        parse_monomial(spec, 3)
