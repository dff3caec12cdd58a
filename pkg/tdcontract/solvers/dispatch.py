"""
Selects the polynomial-time procedure that applies to the class given by a
forbidden pattern, falling back to the exact oracle.
"""
import logging
import typing

from ..dichotomy import linear_forest_sizes
from ..graph.generators import linear_forest
from ..graph.graph import Graph
from ..graph.patterns import contains_induced
from ..oracle.contraction import decide_by_definition
from .cograph import decide_p4_free
from .lifting import Decider, lift_plus_k1
from .membership import MEMBERSHIP_CHECK_LIMIT
from .p4_kp3_free import decide_p4_kp3_free
from .p5_free import decide_p5_free

_log = logging.getLogger("TdContract")


def _p5_plus_isolated(t: int, budget: typing.Optional[int]) -> Decider:
    if t == 0:
        return lambda g: decide_p5_free(g, verify=False)
    pattern = linear_forest([5] + [1] * (t - 1))
    base = _p5_plus_isolated(t - 1, budget)
    return lambda g: lift_plus_k1(g, pattern, base, verify=False, budget=budget)


def select_procedure(
    h: Graph, budget: typing.Optional[int] = None
) -> typing.Optional[typing.Tuple[str, Decider]]:
    """
    :param h: The forbidden pattern.
    :return: Name and decision procedure for connected h-free graphs, or
     None if no polynomial-time procedure covers h.
    """
    sizes = linear_forest_sizes(h)
    if not sizes:
        return None
    largest, rest = sizes[0], sizes[1:]
    if largest <= 4 and not rest:
        return "P4-free", lambda g: decide_p4_free(g, verify=False)
    if largest == 5 and all(s == 1 for s in rest):
        return f"(P5+{len(rest)}K1)-free", _p5_plus_isolated(len(rest), budget)
    if largest <= 4 and all(s <= 3 for s in rest):
        k = len(rest)
        return (
            f"(P4+{k}P3)-free",
            lambda g: decide_p4_kp3_free(g, k, verify=False, budget=budget),
        )
    return None


def decide_auto(
    g: Graph,
    h_hint: typing.Optional[Graph] = None,
    budget: typing.Optional[int] = None,
) -> bool:
    """
    Decides the instance with the polynomial-time procedure for the class of
    h_hint-free graphs if it applies, otherwise by definition. Membership of
    g in the class is checked for graphs up to MEMBERSHIP_CHECK_LIMIT
    vertices.
    """
    selected = None if h_hint is None else select_procedure(h_hint, budget)
    if selected is not None:
        name, procedure = selected
        if g.n > MEMBERSHIP_CHECK_LIMIT:
            _log.debug("Trusting membership in the class of %s graphs.", name)
            return procedure(g)
        if g.n >= 2 and g.is_connected() and not contains_induced(g, h_hint):
            _log.debug("Using the algorithm for %s graphs.", name)
            return procedure(g)
        _log.info("Graph is not a connected %s graph; using the exact oracle.", name)
    return decide_by_definition(g, budget)
