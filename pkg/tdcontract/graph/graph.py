"""
Simple undirected graphs on dense vertex ids 0..n-1.

The adjacency of every vertex is stored as an integer bitmask (bit `u` of
`rows[v]` is set iff `uv` is an edge). All search code of this package works
on these masks, since neighborhood unions and intersections then become
single integer operations.
"""
import functools
import typing
from dataclasses import dataclass

import networkx as nx

from ..errors import InvalidEdgeError

VertexSet = typing.FrozenSet[int]


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def iter_bits(mask: int) -> typing.Iterator[int]:
    """
    Iterates the set bits of a mask in increasing order.
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: typing.Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> VertexSet:
    return frozenset(iter_bits(mask))


@dataclass(frozen=True, order=True)
class Edge:
    """
    An unordered edge. The endpoints are canonicalized such that u < v.
    """

    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            msg = f"Loop at vertex {self.u} is not a valid edge."
            raise InvalidEdgeError(msg)
        if self.u < 0 or self.v < 0:
            msg = f"Negative vertex id in edge ({self.u}, {self.v})."
            raise InvalidEdgeError(msg)
        if self.u > self.v:
            u, v = self.v, self.u
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)

    def __iter__(self):
        yield self.u
        yield self.v

    def __str__(self):
        return f"{self.u}-{self.v}"


class Graph:
    """
    An immutable simple undirected graph. Vertices are 0..n-1.
    """

    def __init__(
        self,
        n: int,
        edges: typing.Iterable[typing.Union[Edge, typing.Tuple[int, int]]] = (),
    ):
        """
        :param n: The number of vertices.
        :param edges: Pairs of vertex ids. Repeated pairs are merged.
        """
        if n < 0:
            msg = f"Negative vertex count {n}."
            raise ValueError(msg)
        rows = [0] * n
        for u, v in edges:
            if u == v:
                msg = f"Loop at vertex {u} is not allowed."
                raise InvalidEdgeError(msg)
            if not (0 <= u < n and 0 <= v < n):
                msg = f"Edge ({u}, {v}) is out of range for {n} vertices."
                raise InvalidEdgeError(msg)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._rows: typing.Tuple[int, ...] = tuple(rows)

    @classmethod
    def from_rows(cls, rows: typing.Iterable[int]) -> "Graph":
        """
        Creates a graph directly from adjacency masks. The masks have to be
        symmetric and free of loops.
        """
        graph = cls.__new__(cls)
        graph._rows = tuple(rows)
        return graph

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> "Graph":
        """
        Converts a networkx graph. Nodes are numbered in iteration order.
        """
        index = {node: i for i, node in enumerate(nx_graph.nodes)}
        return cls(
            len(index),
            ((index[a], index[b]) for a, b in nx_graph.edges if a != b),
        )

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> typing.Tuple[int, ...]:
        return self._rows

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def neighbor_mask(self, v: int) -> int:
        return self._rows[v]

    def closed_neighbor_mask(self, v: int) -> int:
        return self._rows[v] | (1 << v)

    def neighbors(self, v: int) -> VertexSet:
        return from_mask(self._rows[v])

    def neighborhood_mask(self, mask: int) -> int:
        """
        The union of the open neighborhoods of the vertices in the mask.
        """
        result = 0
        for v in iter_bits(mask):
            result |= self._rows[v]
        return result

    def degree(self, v: int) -> int:
        return popcount(self._rows[v])

    def max_degree(self) -> int:
        return max((self.degree(v) for v in self.vertices()), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self._rows[u] >> v & 1)

    def edges(self) -> typing.List[Edge]:
        """
        :return: All edges, sorted lexicographically.
        """
        return [
            Edge(u, v)
            for u in self.vertices()
            for v in iter_bits(self._rows[u] >> (u + 1) << (u + 1))
        ]

    def num_edges(self) -> int:
        return sum(popcount(row) for row in self._rows) // 2

    def has_isolated_vertex(self) -> bool:
        return any(row == 0 for row in self._rows)

    def reachable_mask(self, source: int) -> int:
        seen = 1 << source
        frontier = seen
        while frontier:
            frontier = self.neighborhood_mask(frontier) & ~seen
            seen |= frontier
        return seen

    def components(self) -> typing.List[VertexSet]:
        """
        :return: The connected components, ordered by their smallest vertex.
        """
        remaining = self.vertex_mask
        components = []
        while remaining:
            source = (remaining & -remaining).bit_length() - 1
            component = self.reachable_mask(source)
            components.append(from_mask(component))
            remaining &= ~component
        return components

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self.reachable_mask(0) == self.vertex_mask

    def induced_subgraph(self, vertices: typing.Iterable[int]) -> "Graph":
        """
        The subgraph induced by the given vertices. The i-th smallest given
        vertex becomes vertex i.
        """
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        rows = []
        for v in order:
            rows.append(to_mask(index[u] for u in iter_bits(self._rows[v]) if u in index))
        return Graph.from_rows(rows)

    @functools.cached_property
    def _nx_graph(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(self.vertices())
        nx_graph.add_edges_from((e.u, e.v) for e in self.edges())
        return nx_graph

    def to_networkx(self) -> nx.Graph:
        """
        :return: A networkx view of the graph. Do not modify it, it is cached.
        """
        return self._nx_graph

    def __eq__(self, other):
        return isinstance(other, Graph) and other._rows == self._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        edges = ", ".join(str(e) for e in self.edges())
        return f"Graph(n={self.n}, edges=[{edges}])"
