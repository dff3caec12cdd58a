"""
Named graphs and random connected graphs. Built with networkx and converted
to dense `Graph` objects.
"""
import random
import typing

import networkx as nx

from .graph import Graph
from .operations import disjoint_union, join

__all__ = (
    "complete",
    "cycle",
    "empty",
    "join",
    "linear_forest",
    "path",
    "random_connected",
    "star",
    "union",
)

MAX_REJECTIONS = 100_000


def _require_positive(n: int) -> None:
    if n < 1:
        msg = f"A graph needs at least one vertex, got n={n}."
        raise ValueError(msg)


def path(n: int) -> Graph:
    """
    The path P_n on n vertices with edges 01, 12, ...
    """
    _require_positive(n)
    return Graph.from_networkx(nx.path_graph(n))


def cycle(n: int) -> Graph:
    if n < 3:
        msg = f"A cycle needs at least three vertices, got n={n}."
        raise ValueError(msg)
    return Graph.from_networkx(nx.cycle_graph(n))


def complete(n: int) -> Graph:
    _require_positive(n)
    return Graph.from_networkx(nx.complete_graph(n))


def star(n: int) -> Graph:
    """
    The star K_{1,n}. Vertex 0 is the center, star(3) is the claw.
    """
    _require_positive(n)
    return Graph.from_networkx(nx.star_graph(n))


def empty(n: int) -> Graph:
    """
    n isolated vertices (nK1).
    """
    _require_positive(n)
    return Graph(n)


def union(g1: Graph, g2: Graph) -> Graph:
    return disjoint_union(g1, g2)


def linear_forest(sizes: typing.Iterable[int]) -> Graph:
    """
    Disjoint union of paths, e.g., [4, 3, 3, 1] gives P4+2P3+K1.
    """
    result = Graph(0)
    for size in sizes:
        result = disjoint_union(result, path(size))
    return result


def random_connected(
    n: int, p: float, seed: typing.Union[int, random.Random, None] = None
) -> Graph:
    """
    Draws Erdős–Rényi graphs G(n,p) until one is connected.
    :param n: Number of vertices.
    :param p: Edge probability.
    :param seed: A seed or a random generator. Equal seeds yield equal graphs.
    :return: A connected graph on n vertices.
    """
    _require_positive(n)
    if not 0.0 <= p <= 1.0:
        msg = f"Edge probability {p} is not within [0,1]."
        raise ValueError(msg)
    if n > 1 and p == 0.0:
        msg = "With p=0, no connected graph with more than one vertex exists."
        raise ValueError(msg)
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    for _ in range(MAX_REJECTIONS):
        nx_graph = nx.erdos_renyi_graph(n, p, seed=rng)
        if nx.is_connected(nx_graph):
            return Graph.from_networkx(nx_graph)
    msg = f"No connected G({n},{p}) found after {MAX_REJECTIONS} draws."
    raise ValueError(msg)
