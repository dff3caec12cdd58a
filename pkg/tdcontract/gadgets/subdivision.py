"""
Replacing every edge by a path with four inner vertices raises the total
domination number by exactly two per edge and preserves whether a single
contraction reduces it. Repeating the transformation multiplies every
cycle length by five, which yields instances without short cycles.
"""
import logging
import typing

from ..errors import GadgetError
from ..graph.graph import Graph
from ..graph.operations import k_subdivide
from ..oracle.contraction import has_min_tds_with_p3
from ..oracle.domination import gamma_t
from .gadget import GadgetOutput

SUBDIVISION_LENGTH = 4
SMALL_SOURCE_LIMIT = 20

_log = logging.getLogger("TdContract")


def _require_source(g: Graph) -> None:
    if g.n < 3:
        msg = f"The subdivision needs at least three vertices, got {g.n}."
        raise GadgetError(msg)
    if not g.is_connected():
        msg = "The source graph has to be connected."
        raise GadgetError(msg)


def four_subdivide_all(g: Graph) -> Graph:
    """
    4-subdivides every edge of g. New vertices are appended in the order of
    the edges; the old vertices keep their ids.
    """
    _require_source(g)
    result = g
    for e in g.edges():
        result = k_subdivide(result, e, SUBDIVISION_LENGTH)
    return result


def rounds_for_girth(max_cycle: int) -> int:
    """
    :return: The number of rounds after which no cycle of length at most
     max_cycle remains (every cycle has length at least 3*5^rounds).
    """
    rounds, shortest = 0, 3
    while shortest <= max_cycle:
        rounds += 1
        shortest *= 5
    return rounds


def build_subdivision_gadget(
    g: Graph, rounds: int = 1, budget: typing.Optional[int] = None
) -> GadgetOutput:
    """
    :param g: A connected graph with at least three vertices.
    :param rounds: How often every edge is 4-subdivided.
    :param budget: Node limit for computing the expectations of small sources.
    :return: The instance with roles "v[i]" for the original vertices and
     "e{r}[u-v]_i" for the i-th inner vertex of edge uv in round r.
    """
    _require_source(g)
    if rounds < 0:
        msg = f"Negative number of rounds {rounds}."
        raise GadgetError(msg)
    roles = {f"v[{v}]": v for v in g.vertices()}
    graph = g
    added_gamma = 0
    expected_n, expected_m = g.n, g.num_edges()
    for r in range(1, rounds + 1):
        edges = graph.edges()
        added_gamma += 2 * len(edges)
        expected_n, expected_m = expected_n + SUBDIVISION_LENGTH * expected_m, 5 * expected_m
        subdivided = four_subdivide_all(graph)
        next_id = graph.n
        for e in edges:
            for i in range(1, SUBDIVISION_LENGTH + 1):
                roles[f"e{r}[{e.u}-{e.v}]_{i}"] = next_id
                next_id += 1
        graph = subdivided
    meta: typing.Dict[str, typing.Any] = {
        "rounds": rounds,
        "added_gamma_t": added_gamma,
        "expected_n": expected_n,
    }
    if g.n <= SMALL_SOURCE_LIMIT:
        source_gamma = gamma_t(g, budget)
        assert source_gamma is not None
        meta["source_gamma_t"] = source_gamma
        meta["expected_gamma_t"] = source_gamma + added_gamma
        meta["expected_decision"] = has_min_tds_with_p3(g, budget)
    _log.debug("Subdivided %d times: %d -> %d vertices.", rounds, g.n, graph.n)
    return GadgetOutput(graph, roles, "subdiv4", meta, source=g)


def cycle_free_instance(
    g: Graph, max_cycle: int, budget: typing.Optional[int] = None
) -> GadgetOutput:
    """
    An equivalent instance without cycles of length 3..max_cycle.
    """
    gadget = build_subdivision_gadget(g, rounds_for_girth(max_cycle), budget)
    gadget.meta["max_cycle"] = max_cycle
    return gadget
