"""
Polynomial-time algorithm for connected (P4+kP3)-free graphs.

An induced P4+(k-1)P3 on the vertex set A splits the graph into A, its
neighbors B, and the rest C. C induces a disjoint union of cliques. Cliques
of C whose closed neighborhood is P4-free and which are not complete to a
single vertex of B are candidates; a candidate is regular if k further
candidates lie pairwise at distance at least four from it and from each
other. The decision then only depends on the regular cliques and a bounded
number of vertices around them.
"""
import itertools
import logging
import typing
from dataclasses import dataclass, field

from ..errors import ClassMembershipError
from ..graph.generators import path
from ..graph.graph import Graph, VertexSet, from_mask, iter_bits, to_mask
from ..graph.operations import closed_neighborhood, distance, is_clique
from ..graph.patterns import find_induced, p4_plus_kp3
from ..oracle.contraction import induces_p3
from ..oracle.cover_search import CoverSearch
from ..oracle.domination import enumerate_min_tds
from .cograph import decide_p4_free
from .membership import require_connected, require_h_free, should_verify

_log = logging.getLogger("TdContract")


@dataclass(frozen=True)
class AbcPartition:
    """
    A induces P4+(k-1)P3, B = N(A) \\ A, C = V \\ N[A].
    """

    a: VertexSet
    b: VertexSet
    c: VertexSet


@dataclass(frozen=True)
class RegularCliqueSet:
    all_cliques: typing.List[VertexSet] = field(default_factory=list)
    kprime: typing.List[VertexSet] = field(default_factory=list)
    regular: typing.List[VertexSet] = field(default_factory=list)


def f_bound(a_size: int, k: int) -> int:
    """
    Upper bound on the total domination number that separates the cases
    without regular cliques:
    3(|A|-1) + s(s+1) + k + 1 with s = k^2/2 + 3k/2.
    """
    if k < 1:
        msg = f"The bound is defined for k >= 1, got {k}."
        raise ValueError(msg)
    s = k * (k + 3) // 2
    return 3 * (a_size - 1) + s * (s + 1) + k + 1


def compute_partition(g: Graph, k: int) -> typing.Optional[AbcPartition]:
    """
    :return: The partition for the first induced P4+(k-1)P3 or None if g is
     (P4+(k-1)P3)-free.
    """
    if k < 1:
        msg = f"The partition needs k >= 1, got {k}."
        raise ValueError(msg)
    a = find_induced(g, p4_plus_kp3(k - 1))
    if a is None:
        return None
    a_mask = to_mask(a)
    b_mask = g.neighborhood_mask(a_mask) & ~a_mask
    c_mask = g.vertex_mask & ~(a_mask | b_mask)
    return AbcPartition(a, from_mask(b_mask), from_mask(c_mask))


def _has_packing(
    candidates: typing.List[int], needed: int, far: typing.Callable[[int, int], bool]
) -> bool:
    # exact search for `needed` candidates pairwise far apart
    if needed == 0:
        return True
    for chosen in itertools.combinations(candidates, needed):
        if all(far(i, j) for i, j in itertools.combinations(chosen, 2)):
            return True
    return False


def compute_regular_cliques(g: Graph, part: AbcPartition, k: int) -> RegularCliqueSet:
    """
    Determines the cliques of g[C], the candidate cliques K', and the regular
    ones among them.
    """
    c_order = sorted(part.c)
    cliques = []
    for component in g.induced_subgraph(c_order).components():
        clique = frozenset(c_order[i] for i in component)
        if not is_clique(g, clique):
            msg = "C does not induce a union of cliques; the graph is not (P4+kP3)-free."
            raise ClassMembershipError(msg)
        cliques.append(clique)
    p4 = path(4)
    kprime = []
    for clique in cliques:
        neighborhood = g.induced_subgraph(iter_bits(closed_neighborhood(g, clique)))
        if find_induced(neighborhood, p4) is not None:
            continue
        clique_mask = to_mask(clique)
        if any(g.neighbor_mask(b) & clique_mask == clique_mask for b in part.b):
            continue
        kprime.append(clique)

    distances: typing.Dict[typing.Tuple[int, int], float] = {}
    for i, j in itertools.combinations(range(len(kprime)), 2):
        d = distance(g, kprime[i], kprime[j])
        distances[(i, j)] = distances[(j, i)] = float("inf") if d is None else d

    def far(i: int, j: int) -> bool:
        return distances[(i, j)] >= 4

    regular = []
    for i, clique in enumerate(kprime):
        partners = [j for j in range(len(kprime)) if j != i and far(i, j)]
        if _has_packing(partners, k, far):
            regular.append(clique)
    return RegularCliqueSet(cliques, kprime, regular)


def decide_p4_kp3_free(
    g: Graph,
    k: int,
    verify: typing.Optional[bool] = None,
    budget: typing.Optional[int] = None,
) -> bool:
    """
    Decides whether a single contraction reduces gamma_t of a connected
    (P4+kP3)-free graph.
    :param g: The graph.
    :param k: The number of P3s in the forbidden pattern.
    :param verify: Check the class membership (default: only for small graphs).
    :param budget: Node limit for the bounded searches.
    :return: True for yes-instances.
    """
    if k < 0:
        msg = f"k has to be nonnegative, got {k}."
        raise ValueError(msg)
    if should_verify(g, verify):
        require_connected(g)
        require_h_free(g, [p4_plus_kp3(k)], f"(P4+{k}P3)-free")
    verdict, step = _decide(g, k, budget)
    _log.debug("(P4+%dP3)-free algorithm answered %s in step %s.", k, verdict, step)
    return verdict


def _decide(g: Graph, k: int, budget: typing.Optional[int]) -> typing.Tuple[bool, str]:
    if k == 0:
        return decide_p4_free(g, verify=False), "P4-free"
    part = compute_partition(g, k)
    if part is None:
        return _decide(g, k - 1, budget)
    return decide_from_partition(g, part, k, budget)


def decide_from_partition(
    g: Graph, part: AbcPartition, k: int, budget: typing.Optional[int] = None
) -> typing.Tuple[bool, str]:
    """
    Runs the decision for a given partition, i.e., for any induced
    P4+(k-1)P3 on part.a.
    :return: The answer and the step that produced it.
    """
    cliques = compute_regular_cliques(g, part, k)
    bound = f_bound(len(part.a), k)
    regular = cliques.regular

    if not regular:
        enumeration = enumerate_min_tds(g, max_size=bound, budget=budget)
        if enumeration is None:
            return True, "1 (large gamma_t)"
        return any(induces_p3(g, s) for s in enumeration.sets), "1 (P3 criterion)"

    for first, second in itertools.combinations(regular, 2):
        d = distance(g, first, second)
        if d is not None and d <= 3:
            return True, "2"

    near = closed_neighborhood(g, itertools.chain.from_iterable(regular))
    v1 = g.neighborhood_mask(near) & ~near
    v2 = g.vertex_mask & ~(near | v1)
    if not v2:
        return False, "3"

    search = CoverSearch(g, targets=v2, candidates=v1 | v2, budget=budget)
    covers = search.enumerate_minimum(upper=2 * bound)
    if covers is None:
        return True, "4"
    _, minimum = covers
    for cover in minimum:
        if induces_p3(g, iter_bits(cover)):
            return True, "5 (P3)"
        if cover & v1:
            return True, "5 (V1)"
    assert all(not cover & v1 and not induces_p3(g, iter_bits(cover)) for cover in minimum)
    return False, "6"
