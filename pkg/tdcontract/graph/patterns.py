"""
Induced-subgraph search for small pattern graphs. Uses the VF2 matcher of
networkx, which checks node-induced subgraph isomorphism (edges and
non-edges are both preserved).
"""
import typing

from networkx.algorithms.isomorphism import GraphMatcher

from .generators import linear_forest, star
from .graph import Graph, VertexSet


def find_induced(g: Graph, h: Graph) -> typing.Optional[VertexSet]:
    """
    Searches for a set S of vertices of g such that g[S] is isomorphic to h.
    :return: The first such S or None if g is h-free.
    """
    if h.n == 0:
        return frozenset()
    if h.n > g.n or h.num_edges() > g.num_edges() or h.max_degree() > g.max_degree():
        return None
    matcher = GraphMatcher(g.to_networkx(), h.to_networkx())
    for mapping in matcher.subgraph_isomorphisms_iter():
        return frozenset(mapping.keys())
    return None


def contains_induced(g: Graph, h: Graph) -> bool:
    return find_induced(g, h) is not None


def is_h_free(g: Graph, family: typing.Iterable[Graph]) -> bool:
    """
    :return: True iff g contains none of the graphs in family as induced
     subgraph.
    """
    return not any(contains_induced(g, h) for h in family)


def claw() -> Graph:
    return star(3)


def p4_plus_kp3(k: int) -> Graph:
    return linear_forest([4] + [3] * k)
