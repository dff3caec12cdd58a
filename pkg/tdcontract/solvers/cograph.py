"""
P4-free graphs (cographs). A connected cograph on at least two vertices is
the join of two graphs, so two adjacent vertices from both sides totally
dominate it. Hence gamma_t = 2 and no contraction can reduce it.
"""
import typing

from ..graph.generators import path
from ..graph.graph import Graph
from ..oracle.domination import has_dominating_edge
from .membership import require_connected, require_h_free, should_verify


def decide_p4_free(g: Graph, verify: typing.Optional[bool] = None) -> bool:
    """
    :param g: A connected P4-free graph with at least two vertices.
    :param verify: Check the class membership (default: only for small graphs).
    :return: Always False.
    """
    if should_verify(g, verify):
        require_connected(g)
        require_h_free(g, [path(4)], "P4-free")
    assert has_dominating_edge(g) is not None, "Connected cograph without dominating edge."
    return False
