"""
Class-membership checks guarding the polynomial-time solvers.
"""
import typing

from ..errors import ClassMembershipError
from ..graph.graph import Graph
from ..graph.patterns import find_induced

MEMBERSHIP_CHECK_LIMIT = 40


def should_verify(g: Graph, verify: typing.Optional[bool]) -> bool:
    """
    Membership is verified by default only up to MEMBERSHIP_CHECK_LIMIT
    vertices, as the pattern search dominates the running time.
    """
    return g.n <= MEMBERSHIP_CHECK_LIMIT if verify is None else verify


def require_connected(g: Graph) -> None:
    if g.n < 2 or not g.is_connected():
        msg = f"Expected a connected graph with at least two vertices (n={g.n})."
        raise ClassMembershipError(msg)


def require_h_free(g: Graph, family: typing.Iterable[Graph], name: str) -> None:
    """
    :param name: Human readable name of the class for the error message.
    """
    for h in family:
        witness = find_induced(g, h)
        if witness is not None:
            msg = f"Graph is not {name}: induced copy on {sorted(witness)}."
            raise ClassMembershipError(msg)
