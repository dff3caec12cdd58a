"""
Exact domination and total domination numbers, minimum total dominating set
enumeration, and dominating edges.
"""
import typing
from dataclasses import dataclass, field

from ..errors import NoTotalDominatingSetError
from ..graph.graph import Edge, Graph, VertexSet, from_mask, iter_bits, to_mask
from .cover_search import CoverSearch


@dataclass(frozen=True)
class TdsEnumeration:
    """
    All minimum total dominating sets of a graph, ordered lexicographically
    by their sorted members.
    """

    size: int
    sets: typing.List[VertexSet] = field(default_factory=list)

    def serialize(self) -> dict:
        return {"size": self.size, "sets": [sorted(s) for s in self.sets]}


def is_total_dominating(g: Graph, vertices: typing.Iterable[int]) -> bool:
    """
    :return: True iff every vertex of g has a neighbor in the given set.
    """
    return CoverSearch(g).covers(to_mask(vertices))


def is_dominating(g: Graph, vertices: typing.Iterable[int]) -> bool:
    return CoverSearch(g, closed=True).covers(to_mask(vertices))


def minimum_tds(
    g: Graph, budget: typing.Optional[int] = None
) -> typing.Optional[VertexSet]:
    """
    :return: A minimum total dominating set, or None if g has an isolated
     vertex.
    """
    if g.n < 1:
        msg = "Total domination needs at least one vertex."
        raise ValueError(msg)
    if g.has_isolated_vertex():
        return None
    witness = CoverSearch(g, budget=budget).minimum()
    assert witness is not None
    return from_mask(witness)


def gamma_t(g: Graph, budget: typing.Optional[int] = None) -> typing.Optional[int]:
    """
    The total domination number.
    :param g: The graph.
    :param budget: Node limit of the search. Raises SearchBudgetExceeded.
    :return: gamma_t(g), or None (no TDS) iff g has an isolated vertex.
     Raises ValueError for the graph without vertices.
    """
    witness = minimum_tds(g, budget)
    return None if witness is None else len(witness)


def minimum_dominating_set(g: Graph, budget: typing.Optional[int] = None) -> VertexSet:
    witness = CoverSearch(g, closed=True, budget=budget).minimum()
    assert witness is not None, "Every graph has a dominating set."
    return from_mask(witness)


def gamma(g: Graph, budget: typing.Optional[int] = None) -> int:
    """
    The domination number.
    """
    if g.n < 1:
        msg = "The domination number needs at least one vertex."
        raise ValueError(msg)
    return len(minimum_dominating_set(g, budget))


def enumerate_min_tds(
    g: Graph,
    max_size: typing.Optional[int] = None,
    budget: typing.Optional[int] = None,
) -> typing.Optional[TdsEnumeration]:
    """
    Enumerates all minimum total dominating sets.
    :param g: The graph.
    :param max_size: If given, the enumeration is only carried out if
     gamma_t(g) <= max_size, otherwise None is returned.
    :param budget: Node limit of the search.
    :return: The enumeration (or None, see max_size).
    """
    if g.has_isolated_vertex() or g.n == 0:
        msg = "A graph with an isolated vertex has no total dominating set."
        raise NoTotalDominatingSetError(msg)
    result = CoverSearch(g, budget=budget).enumerate_minimum(max_size)
    if result is None:
        return None
    size, masks = result
    return TdsEnumeration(size, [from_mask(mask) for mask in masks])


def has_dominating_edge(g: Graph) -> typing.Optional[Edge]:
    """
    :return: The first edge uv (lexicographically) with N[u] ∪ N[v] = V, or
     None.
    """
    everything = g.vertex_mask
    for u in g.vertices():
        closed_u = g.closed_neighbor_mask(u)
        for v in iter_bits(g.neighbor_mask(u) >> (u + 1) << (u + 1)):
            if closed_u | g.closed_neighbor_mask(v) == everything:
                return Edge(u, v)
    return None
