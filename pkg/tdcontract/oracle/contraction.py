"""
Deciding whether edge contractions reduce the total domination number:
by definition (contract every edge and recompute), by the P3 criterion on
minimum total dominating sets, and the minimum number of contractions.
"""
import logging
import typing
from dataclasses import dataclass

from ..errors import ClassMembershipError
from ..graph.graph import Edge, Graph, VertexSet, iter_bits, popcount, to_mask
from ..graph.operations import contract_edge
from .domination import enumerate_min_tds, gamma_t

_log = logging.getLogger("TdContract")


@dataclass(frozen=True)
class CtResult:
    """
    Minimum number of contractions that reduce the total domination number.
    `value` is None if the graph is irreducible within the searched depth.
    """

    value: typing.Optional[int]

    @property
    def is_irreducible(self) -> bool:
        return self.value is None

    def __str__(self):
        return "IRREDUCIBLE" if self.value is None else str(self.value)


def induces_p3(g: Graph, vertices: typing.Iterable[int]) -> bool:
    """
    :return: True iff g[D] contains a P3 (not necessarily induced), i.e.,
     some vertex of D has at least two neighbors in D.
    """
    mask = to_mask(vertices)
    return any(popcount(g.neighbor_mask(v) & mask) >= 2 for v in iter_bits(mask))


def _require_connected(g: Graph) -> None:
    if g.n < 2 or not g.is_connected():
        msg = "Expected a connected graph with at least two vertices."
        raise ClassMembershipError(msg)


def min_tds_with_p3(
    g: Graph,
    max_size: typing.Optional[int] = None,
    budget: typing.Optional[int] = None,
) -> typing.Optional[VertexSet]:
    """
    :return: The first minimum TDS of g that contains a P3, or None.
    """
    enumeration = enumerate_min_tds(g, max_size=max_size, budget=budget)
    if enumeration is None:
        msg = f"The total domination number exceeds {max_size}."
        raise ValueError(msg)
    for tds in enumeration.sets:
        if induces_p3(g, tds):
            return tds
    return None


def has_min_tds_with_p3(g: Graph, budget: typing.Optional[int] = None) -> bool:
    """
    The P3 criterion: a connected graph can be reduced by one contraction
    iff one of its minimum total dominating sets contains a P3.
    """
    return min_tds_with_p3(g, budget=budget) is not None


def find_reducing_edge(
    g: Graph, budget: typing.Optional[int] = None
) -> typing.Optional[Edge]:
    """
    Contracts every edge and recomputes the total domination number.
    Contractions without total dominating set count as failure.
    :return: The first edge whose contraction reduces gamma_t, or None.
    """
    _require_connected(g)
    target = gamma_t(g, budget)
    assert target is not None
    if target <= 2:
        return None
    for e in g.edges():
        reduced = gamma_t(contract_edge(g, e).graph, budget)
        if reduced is not None and reduced <= target - 1:
            return e
    return None


def decide_by_definition(g: Graph, budget: typing.Optional[int] = None) -> bool:
    return find_reducing_edge(g, budget) is not None


def ct_gamma_t(
    g: Graph, max_depth: int = 3, budget: typing.Optional[int] = None
) -> CtResult:
    """
    Breadth-first search over contraction sequences. Graphs of one level are
    deduplicated by their labeled adjacency.
    :param g: A connected graph.
    :param max_depth: The maximal number of contractions.
    :return: The least number of contractions reducing gamma_t.
    """
    if not g.is_connected():
        msg = "Expected a connected graph."
        raise ClassMembershipError(msg)
    target = gamma_t(g, budget)
    if target is None or target <= 2:
        return CtResult(None)
    level = {g}
    seen = {g}
    for depth in range(1, max_depth + 1):
        next_level = set()
        for graph in level:
            for e in graph.edges():
                contracted = contract_edge(graph, e).graph
                if contracted in seen:
                    continue
                seen.add(contracted)
                reduced = gamma_t(contracted, budget)
                if reduced is not None and reduced <= target - 1:
                    _log.debug("Reduced gamma_t after %d contractions.", depth)
                    return CtResult(depth)
                next_level.add(contracted)
        level = next_level
    return CtResult(None)
