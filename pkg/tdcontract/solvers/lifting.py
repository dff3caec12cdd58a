"""
Lifting a solver for H-free graphs to (H+K1)-free graphs: if a connected
(H+K1)-free graph contains an induced H on q vertices, these q vertices
dominate the graph, hence gamma_t <= 2q and a bounded enumeration of the
minimum total dominating sets decides the instance.
"""
import logging
import typing

from ..errors import ClassMembershipError
from ..graph.generators import empty
from ..graph.graph import Graph
from ..graph.operations import disjoint_union
from ..graph.patterns import find_induced
from ..oracle.contraction import induces_p3
from ..oracle.domination import enumerate_min_tds, has_dominating_edge
from .membership import require_connected, require_h_free, should_verify

_log = logging.getLogger("TdContract")

Decider = typing.Callable[[Graph], bool]


def lift_plus_k1(
    g: Graph,
    h: Graph,
    base: Decider,
    q: typing.Optional[int] = None,
    verify: typing.Optional[bool] = None,
    budget: typing.Optional[int] = None,
) -> bool:
    """
    :param g: A connected (h+K1)-free graph.
    :param h: The pattern.
    :param base: Decision procedure for connected h-free graphs.
    :param q: Bound on the size of the dominating copy (default |V(h)|).
    :param verify: Check the class membership (default: only for small graphs).
    :param budget: Node limit of the enumeration.
    :return: True for yes-instances.
    """
    q = h.n if q is None else q
    if should_verify(g, verify):
        require_connected(g)
        require_h_free(g, [disjoint_union(h, empty(1))], "(H+K1)-free")
    copy = find_induced(g, h)
    if copy is None:
        return base(g)
    _log.debug("Induced copy of H on %s dominates the graph.", sorted(copy))
    if has_dominating_edge(g) is not None:
        return False
    enumeration = enumerate_min_tds(g, max_size=2 * q, budget=budget)
    if enumeration is None:
        msg = f"gamma_t exceeds {2 * q}; the graph is not (H+K1)-free."
        raise ClassMembershipError(msg)
    return any(induces_p3(g, s) for s in enumeration.sets)
