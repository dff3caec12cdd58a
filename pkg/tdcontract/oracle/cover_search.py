"""
Branch and bound for minimum covers: sets D of candidate vertices such that
every target vertex has a neighbor in D (open covers, total domination) or
is in D or adjacent to D (closed covers, domination).

The search branches on the undominated target with the fewest remaining
dominators and tries these dominators in increasing order. Dominators that
have already been tried at a node are excluded in the later branches of the
same node, so every minimal cover is generated at most once. Nodes are cut
by the larger of two lower bounds: a packing of targets with pairwise
disjoint dominator sets, and the undominated count divided by the largest
coverage of a single candidate.
"""
import logging
import typing

from ..errors import SearchBudgetExceeded
from ..graph.graph import Graph, iter_bits, popcount

DEFAULT_SEARCH_BUDGET = 500_000

_log = logging.getLogger("TdContract")


class CoverSearch:
    def __init__(
        self,
        graph: Graph,
        targets: typing.Optional[int] = None,
        candidates: typing.Optional[int] = None,
        closed: bool = False,
        budget: typing.Optional[int] = None,
    ):
        """
        :param graph: The graph.
        :param targets: Mask of the vertices that have to be dominated
         (default: all).
        :param candidates: Mask of the vertices that may be chosen (default: all).
        :param closed: Closed neighborhoods (domination) instead of open ones
         (total domination).
        :param budget: Maximal number of search nodes, None for no limit.
        """
        self.graph = graph
        self.targets = graph.vertex_mask if targets is None else targets
        self.candidates = graph.vertex_mask if candidates is None else candidates
        self.closed = closed
        self.budget = budget
        self.explored = 0
        self._dominators = [0] * graph.n
        self._dominated_by = [0] * graph.n
        for v in graph.vertices():
            reach = graph.closed_neighbor_mask(v) if closed else graph.neighbor_mask(v)
            self._dominators[v] = reach & self.candidates
            self._dominated_by[v] = reach & self.targets
        self._max_cover = max(
            (popcount(self._dominated_by[d]) for d in iter_bits(self.candidates)),
            default=0,
        )

    def is_feasible(self) -> bool:
        """
        :return: True iff every target has at least one dominator.
        """
        return all(self._dominators[t] for t in iter_bits(self.targets))

    def covers(self, chosen: int) -> bool:
        dominated = 0
        for d in iter_bits(chosen):
            dominated |= self._dominated_by[d]
        return (self.targets & ~dominated) == 0

    def greedy(self) -> typing.Optional[int]:
        """
        Greedy cover: repeatedly picks the candidate dominating the most
        undominated targets (ties to the smaller id).
        :return: A cover as mask, or None if none exists.
        """
        if not self.is_feasible():
            return None
        chosen, undominated = 0, self.targets
        while undominated:
            best = max(
                iter_bits(self.candidates & ~chosen),
                key=lambda d: (popcount(self._dominated_by[d] & undominated), -d),
            )
            chosen |= 1 << best
            undominated &= ~self._dominated_by[best]
        return chosen

    def minimum(self, upper: typing.Optional[int] = None) -> typing.Optional[int]:
        """
        A minimum cover found by iterative deepening.
        :param upper: Only covers of at most this size are of interest.
        :return: A minimum cover as mask, or None if no cover (within `upper`)
         exists.
        """
        greedy = self.greedy()
        if greedy is None:
            return None
        best = popcount(greedy)
        lower = max(1, self._root_lower_bound()) if self.targets else 0
        limit = best - 1 if upper is None else min(best - 1, upper)
        for size in range(lower, limit + 1):
            found: typing.List[int] = []
            self._branch(0, self.targets, 0, size, found, find_all=False)
            if found:
                _log.debug("Minimum cover of size %d after %d nodes.", size, self.explored)
                return found[0]
        if upper is not None and best > upper:
            return None
        return greedy

    def enumerate_minimum(
        self, upper: typing.Optional[int] = None
    ) -> typing.Optional[typing.Tuple[int, typing.List[int]]]:
        """
        All minimum covers.
        :param upper: Only covers of at most this size are of interest.
        :return: The minimum size and all covers of that size as sorted
         masks, or None if no cover (within `upper`) exists.
        """
        witness = self.minimum(upper)
        if witness is None:
            return None
        size = popcount(witness)
        found: typing.List[int] = []
        self._branch(0, self.targets, 0, size, found, find_all=True)
        assert witness in found, "The enumeration misses a minimum cover."
        return size, sorted(found, key=lambda m: tuple(iter_bits(m)))

    def exists(self, size: int) -> bool:
        """
        :return: True iff a cover of at most `size` vertices exists.
        """
        if not self.is_feasible():
            return False
        found: typing.List[int] = []
        self._branch(0, self.targets, 0, size, found, find_all=False)
        return bool(found)

    def _root_lower_bound(self) -> int:
        return self._bound(self.targets, 0)[0]

    def _bound(self, undominated: int, excluded: int) -> typing.Tuple[int, int, int]:
        # returns (lower bound, target with fewest dominators, its dominators)
        packing, used = 0, 0
        pick, pick_options, fewest = -1, 0, -1
        for t in iter_bits(undominated):
            options = self._dominators[t] & ~excluded
            if not options:
                return self.graph.n + 1, t, 0
            if not options & used:
                packing += 1
                used |= options
            count = popcount(options)
            if fewest < 0 or count < fewest:
                pick, pick_options, fewest = t, options, count
        by_degree = -(-popcount(undominated) // max(1, self._max_cover))
        return max(packing, by_degree), pick, pick_options

    def _branch(
        self,
        chosen: int,
        undominated: int,
        excluded: int,
        remaining: int,
        found: typing.List[int],
        find_all: bool,
    ) -> bool:
        self.explored += 1
        if self.budget is not None and self.explored > self.budget:
            raise SearchBudgetExceeded(self.budget, self.explored)
        if not undominated:
            found.append(chosen)
            return not find_all
        if remaining <= 0:
            return False
        lower, _, options = self._bound(undominated, excluded)
        if lower > remaining:
            return False
        for d in iter_bits(options):
            if self._branch(
                chosen | (1 << d),
                undominated & ~self._dominated_by[d],
                excluded,
                remaining - 1,
                found,
                find_all,
            ):
                return True
            excluded |= 1 << d
        return False
