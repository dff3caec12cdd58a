"""
P5-free graphs: a connected P5-free graph is a yes-instance iff its total
domination number is at least three, i.e., iff it has no dominating edge.
"""
import typing

from ..graph.generators import path
from ..graph.graph import Graph
from ..oracle.domination import has_dominating_edge
from .membership import require_connected, require_h_free, should_verify


def decide_p5_free(g: Graph, verify: typing.Optional[bool] = None) -> bool:
    if should_verify(g, verify):
        require_connected(g)
        require_h_free(g, [path(5)], "P5-free")
    return has_dominating_edge(g) is None
