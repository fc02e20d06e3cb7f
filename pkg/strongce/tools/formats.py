"""Text formats for graphs, list assignments and colorings.

GraphFile:    "strongce v1", "n <vertex_count>", then one "u v" line per edge
ListsFile:    "<edge_id> : <c1> <c2> ..." with strictly increasing colors
ColoringFile: "<edge_id> <color>" sorted by edge id

Blank lines and anything after '#' are ignored when parsing.
"""
import re
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from strongce.core.coloring import ListAssignment
from strongce.core.graph import MultiGraph
from strongce.errors import FormatError, GraphError, ListAssignmentError

GRAPH_HEADER = "strongce v1"

PathLike = Union[str, Path]


def _content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield number, tokens


def _integer(token: str, line: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {token!r}", line) from None
    if value < 0:
        raise FormatError(f"{what} must be non-negative, got {value}", line)
    return value


# ----------------------------------------------------------------------
# GraphFile
# ----------------------------------------------------------------------

def parse_graph(text: str) -> MultiGraph:
    lines = list(_content_lines(text))
    if not lines or lines[0][1] != GRAPH_HEADER.split():
        raise FormatError(f"missing header {GRAPH_HEADER!r}", lines[0][0] if lines else 1)
    if len(lines) < 2 or len(lines[1][1]) != 2 or lines[1][1][0] != "n":
        raise FormatError("second line must be 'n <vertex_count>'", lines[1][0] if len(lines) > 1 else None)
    n = _integer(lines[1][1][1], lines[1][0], "vertex count")

    pairs: List[Tuple[int, int]] = []
    for number, tokens in lines[2:]:
        if len(tokens) != 2:
            raise FormatError(f"expected 'u v', got {' '.join(tokens)!r}", number)
        u, v = (_integer(t, number, "endpoint") for t in tokens)
        if u >= n or v >= n:
            raise FormatError(f"endpoint outside 0..{n - 1}", number)
        pairs.append((u, v))
    try:
        return MultiGraph(n, pairs)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def serialize_graph(graph: MultiGraph) -> str:
    lines = [GRAPH_HEADER, f"n {graph.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# ListsFile
# ----------------------------------------------------------------------

def parse_lists(text: str, edge_count: Optional[int] = None) -> ListAssignment:
    """Parse a ListsFile; with `edge_count` every edge 0..edge_count-1 must appear"""
    found: Dict[int, Tuple[int, ...]] = {}
    for number, tokens in _content_lines(text):
        if len(tokens) < 2 or tokens[1] != ":":
            raise FormatError("expected '<edge_id> : <colors>'", number)
        e = _integer(tokens[0], number, "edge id")
        if e in found:
            raise FormatError(f"edge {e} listed twice", number)
        colors = tuple(_integer(t, number, "color") for t in tokens[2:])
        if any(a >= b for a, b in zip(colors, colors[1:])):
            raise FormatError(f"colors of edge {e} are not strictly increasing", number)
        found[e] = colors

    count = edge_count if edge_count is not None else len(found)
    missing = [e for e in range(count) if e not in found]
    if missing:
        raise FormatError(f"no list for edge {missing[0]}")
    extra = [e for e in found if e >= count]
    if extra:
        raise FormatError(f"list for unknown edge {min(extra)}")
    try:
        return ListAssignment(found[e] for e in range(count))
    except ListAssignmentError as exc:
        raise FormatError(str(exc)) from exc


def serialize_lists(lists: ListAssignment) -> str:
    """Colors are written in increasing order"""
    return "".join(f"{e} : {' '.join(str(c) for c in sorted(colors))}\n" for e, colors in enumerate(lists))


# ----------------------------------------------------------------------
# ColoringFile
# ----------------------------------------------------------------------

def parse_coloring(text: str, edge_count: Optional[int] = None) -> List[Optional[int]]:
    """Parse a ColoringFile; edges without a line come back as None"""
    found: Dict[int, int] = {}
    for number, tokens in _content_lines(text):
        if len(tokens) != 2:
            raise FormatError("expected '<edge_id> <color>'", number)
        e = _integer(tokens[0], number, "edge id")
        if e in found:
            raise FormatError(f"edge {e} colored twice", number)
        if edge_count is not None and e >= edge_count:
            raise FormatError(f"edge {e} does not exist", number)
        found[e] = _integer(tokens[1], number, "color")
    count = edge_count if edge_count is not None else (max(found) + 1 if found else 0)
    return [found.get(e) for e in range(count)]


def serialize_coloring(coloring: Sequence[Optional[int]]) -> str:
    return "".join(f"{e} {c}\n" for e, c in enumerate(coloring) if c is not None)


# ----------------------------------------------------------------------
# Files
# ----------------------------------------------------------------------

def read_graph(path: PathLike) -> MultiGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def read_lists(path: PathLike, edge_count: Optional[int] = None) -> ListAssignment:
    return parse_lists(Path(path).read_text(encoding="utf-8"), edge_count)


def read_coloring(path: PathLike, edge_count: Optional[int] = None) -> List[Optional[int]]:
    return parse_coloring(Path(path).read_text(encoding="utf-8"), edge_count)


def write_text(path: PathLike, text: str) -> None:
    target = Path(path)
    if target.parent and not target.parent.exists():
        target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")


# ----------------------------------------------------------------------
# Polynomial inputs for `coeff`
# ----------------------------------------------------------------------

_MONOMIAL_TERM = re.compile(r"x(\d+)(?:\^(\d+))?")


def _variable(token: str, line: int) -> int:
    index = _integer(token[1:] if token.startswith("x") else token, line, "variable index")
    if index < 1:
        raise FormatError("variables are numbered from 1", line)
    return index - 1


def parse_factors(text: str) -> List[Tuple[int, int]]:
    """One factor (x_i - x_j) per line written 'i j' or 'xi xj', variables from 1"""
    factors = []
    for number, tokens in _content_lines(text):
        tokens = [t for t in tokens if t != "-"]
        if len(tokens) != 2:
            raise FormatError("expected a factor 'i j'", number)
        i, j = (_variable(t, number) for t in tokens)
        if i == j:
            raise FormatError(f"factor x{i + 1} - x{j + 1} is identically zero", number)
        factors.append((i, j))
    return factors


def parse_monomial(spec: str, variable_count: int) -> Tuple[int, ...]:
    """Exponent vector from 'x1^2 x3', 'x1x2' or '2,0,1'"""
    text = spec.replace("*", " ").strip()
    if "x" not in text:
        try:
            exponents = [int(t) for t in text.replace(",", " ").split()]
        except ValueError:
            raise FormatError(f"bad monomial {spec!r}") from None
        if len(exponents) > variable_count or any(k < 0 for k in exponents):
            raise FormatError(f"monomial {spec!r} does not fit {variable_count} variables")
        return tuple(exponents + [0] * (variable_count - len(exponents)))

    exponents = [0] * variable_count
    if _MONOMIAL_TERM.sub("", text).strip():
        raise FormatError(f"bad monomial {spec!r}")
    for index, power in _MONOMIAL_TERM.findall(text):
        var = int(index) - 1
        if not 0 <= var < variable_count:
            raise FormatError(f"variable x{index} does not occur in the factors")
        exponents[var] += int(power) if power else 1
    return tuple(exponents)
