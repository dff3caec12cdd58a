"""
Reading and writing graphs in the edge-list text format: a header line
"n m", then m lines "u v" with 0-based vertex ids. Empty lines and lines
starting with '#' are ignored.
"""
import re
import typing
from pathlib import Path

from ..errors import GraphFormatError
from .graph import Graph

_PAIR = re.compile(r"^(?P<a>-?\d+)\s+(?P<b>-?\d+)$")


def _content_lines(text: str) -> typing.Iterator[typing.Tuple[int, str]]:
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line and not line.startswith("#"):
            yield number, line


def parse_edge_list(text: str) -> Graph:
    """
    Parses the edge-list format. Rejects loops, duplicate edges, and ids
    outside of 0..n-1.
    :param text: The content of an edge-list file.
    :return: The graph.
    """
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        msg = "Missing header 'n m'."
        raise GraphFormatError(msg, 1)
    number, line = header
    match = _PAIR.fullmatch(line)
    if not match:
        msg = f"Expected header 'n m', got '{line}'."
        raise GraphFormatError(msg, number)
    n, m = int(match.group("a")), int(match.group("b"))
    if n < 0 or m < 0:
        msg = "Vertex and edge counts have to be nonnegative."
        raise GraphFormatError(msg, number)
    edges: typing.Set[typing.Tuple[int, int]] = set()
    for number, line in lines:
        match = _PAIR.fullmatch(line)
        if not match:
            msg = f"Expected edge 'u v', got '{line}'."
            raise GraphFormatError(msg, number)
        u, v = int(match.group("a")), int(match.group("b"))
        if not (0 <= u < n and 0 <= v < n):
            msg = f"Vertex id out of range 0..{n - 1} in '{line}'."
            raise GraphFormatError(msg, number)
        if u == v:
            msg = f"Loop at vertex {u}."
            raise GraphFormatError(msg, number)
        key = (min(u, v), max(u, v))
        if key in edges:
            msg = f"Duplicate edge {key[0]}-{key[1]}."
            raise GraphFormatError(msg, number)
        edges.add(key)
    if len(edges) != m:
        msg = f"Header announces {m} edges but {len(edges)} were given."
        raise GraphFormatError(msg)
    return Graph(n, sorted(edges))


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges()}"]
    lines.extend(f"{e.u} {e.v}" for e in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: typing.Union[str, Path]) -> Graph:
    with Path(path).open() as file:
        return parse_edge_list(file.read())


def write_graph(g: Graph, path: typing.Union[str, Path]) -> None:
    with Path(path).open("w") as file:
        file.write(format_edge_list(g))
