"""
Seeded random graph streams for the experiments. A sampler draws connected
graphs and pipes them through a chain of filters, e.g., keeping only
P5-free graphs or graphs with gamma_t >= 3.
"""
import abc
import itertools
import logging
import random
import typing

from ..graph.generators import empty, join, random_connected, union
from ..graph.graph import Graph
from ..graph.patterns import is_h_free
from ..oracle.domination import gamma, gamma_t

GraphGenerator = typing.Callable[[int, random.Random], Graph]

DRAWS_PER_SAMPLE = 1_000

_log = logging.getLogger("TdContract")


class GraphFilter(abc.ABC):
    @abc.abstractmethod
    def filter(self, graphs: typing.Iterable[Graph]) -> typing.Iterable[Graph]:
        pass


class HFreeFilter(GraphFilter):
    """
    Keeps the graphs without an induced copy of any graph of the family.
    """

    def __init__(self, family: typing.Iterable[Graph]):
        self.family = list(family)

    def filter(self, graphs: typing.Iterable[Graph]) -> typing.Iterable[Graph]:
        for g in graphs:
            if is_h_free(g, self.family):
                yield g


class MinGammaFilter(GraphFilter):
    def __init__(self, minimum: int, budget: typing.Optional[int] = None):
        self.minimum = minimum
        self.budget = budget

    def filter(self, graphs: typing.Iterable[Graph]) -> typing.Iterable[Graph]:
        for g in graphs:
            if gamma(g, self.budget) >= self.minimum:
                yield g


class MinTotalGammaFilter(GraphFilter):
    def __init__(self, minimum: int, budget: typing.Optional[int] = None):
        self.minimum = minimum
        self.budget = budget

    def filter(self, graphs: typing.Iterable[Graph]) -> typing.Iterable[Graph]:
        for g in graphs:
            value = gamma_t(g, self.budget)
            if value is not None and value >= self.minimum:
                yield g


def random_cograph(n: int, rng: random.Random, connected: bool = True) -> Graph:
    """
    A random cograph from a random cotree: the root is a join if the result
    has to be connected, inner nodes are joins or unions at random.
    """
    if n == 1:
        return empty(1)
    split = rng.randint(1, n - 1)
    left = random_cograph(split, rng, rng.random() < 0.5)
    right = random_cograph(n - split, rng, rng.random() < 0.5)
    return join(left, right) if connected else union(left, right)


class RandomGraphSampler:
    """
    Draws connected graphs with n_min..n_max vertices. The default generator
    draws G(n,p) with p uniform in p_range until the graph is connected.
    Equal seeds yield equal streams.
    """

    def __init__(
        self,
        n_min: int,
        n_max: int,
        p_range: typing.Tuple[float, float] = (0.2, 0.8),
        seed: typing.Optional[int] = None,
        generator: typing.Optional[GraphGenerator] = None,
        log: typing.Callable = print,
    ):
        if not 1 <= n_min <= n_max:
            msg = f"Invalid range of vertex counts {n_min}..{n_max}."
            raise ValueError(msg)
        low, high = p_range
        if not 0.0 < low <= high <= 1.0:
            msg = f"Invalid range of edge probabilities {p_range}."
            raise ValueError(msg)
        self.n_min = n_min
        self.n_max = n_max
        self.p_range = p_range
        self.rng = random.Random(seed)
        self.generator = generator or self._erdos_renyi
        self.filters: typing.List[GraphFilter] = []
        self.log = log

    def add_filter(self, graph_filter: GraphFilter) -> "RandomGraphSampler":
        self.filters.append(graph_filter)
        return self

    def _erdos_renyi(self, n: int, rng: random.Random) -> Graph:
        return random_connected(n, rng.uniform(*self.p_range), seed=rng)

    def _draw(self, limit: int) -> typing.Iterator[Graph]:
        for _ in range(limit):
            yield self.generator(self.rng.randint(self.n_min, self.n_max), self.rng)

    def sample(self, count: int) -> typing.Iterator[Graph]:
        """
        :param count: The number of graphs to yield.
        :return: Up to count graphs that pass all filters. Stops early after
         DRAWS_PER_SAMPLE draws per requested graph.
        """
        graphs: typing.Iterable[Graph] = self._draw(DRAWS_PER_SAMPLE * count)
        for graph_filter in self.filters:
            graphs = graph_filter.filter(graphs)
        produced = 0
        for g in itertools.islice(graphs, count):
            produced += 1
            yield g
        if produced < count:
            _log.warning("Sampler produced only %d of %d graphs.", produced, count)
            self.log(f"Only {produced} of {count} graphs passed the filters.")
