import random
import unittest

import networkx as nx

from tdcontract.errors import InvalidEdgeError
from tdcontract.graph import (
    Edge,
    Graph,
    claw,
    complete,
    contract_edge,
    cycle,
    distance,
    empty,
    girth,
    join,
    k_subdivide,
    path,
    random_connected,
    star,
)


def isomorphic(g1: Graph, g2: Graph) -> bool:
    return nx.is_isomorphic(g1.to_networkx(), g2.to_networkx())


class EdgeTest(unittest.TestCase):
    def test_canonical(self):
        assert Edge(3, 1) == Edge(1, 3)
        assert (Edge(3, 1).u, Edge(3, 1).v) == (1, 3)
        assert str(Edge(2, 0)) == "0-2"

    def test_loop(self):
        with self.assertRaises(InvalidEdgeError):
            Edge(2, 2)

    def test_graph_rejects_invalid_edges(self):
        with self.assertRaises(InvalidEdgeError):
            Graph(3, [(0, 0)])
        with self.assertRaises(InvalidEdgeError):
            Graph(3, [(0, 3)])


class GraphTest(unittest.TestCase):
    def test_symmetric_adjacency(self):
        g = Graph(4, [(0, 1), (1, 2), (1, 0)])
        assert g.num_edges() == 2
        assert g.has_edge(1, 0) and g.has_edge(0, 1)
        assert not g.has_edge(0, 0)
        assert g.neighbors(1) == frozenset({0, 2})
        assert g.degree(3) == 0
        assert g.has_isolated_vertex()

    def test_components(self):
        g = Graph(5, [(0, 1), (3, 4)])
        assert g.components() == [frozenset({0, 1}), frozenset({2}), frozenset({3, 4})]
        assert not g.is_connected()
        assert path(5).is_connected()
        assert Graph(0).is_connected()

    def test_induced_subgraph(self):
        sub = cycle(6).induced_subgraph([5, 0, 1])
        assert sub == Graph(3, [(0, 1), (0, 2)])
        assert sub.num_edges() == 2

    def test_equality(self):
        assert cycle(4) == Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert len({cycle(4), cycle(4), path(4)}) == 2

    def test_networkx_roundtrip(self):
        g = random_connected(7, 0.5, seed=3)
        assert Graph.from_networkx(g.to_networkx()) == g


class ContractionTest(unittest.TestCase):
    def test_triangle(self):
        result = contract_edge(cycle(3), Edge(0, 1))
        assert result.graph == complete(2)
        assert result.relabel == (0, 0, 1)

    def test_single_edge(self):
        assert contract_edge(path(2), Edge(0, 1)).graph == Graph(1)

    def test_cycle(self):
        for e in cycle(6).edges():
            assert isomorphic(contract_edge(cycle(6), e).graph, cycle(5))

    def test_non_edge(self):
        with self.assertRaises(InvalidEdgeError):
            contract_edge(path(3), Edge(0, 2))

    def test_merged_neighborhood(self):
        result = contract_edge(star(3), Edge(0, 2))
        assert result.graph.n == 3
        assert result.graph.degree(0) == 2


class SubdivisionTest(unittest.TestCase):
    def test_path(self):
        assert k_subdivide(path(2), Edge(0, 1), 4) == Graph(6, [(0, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
        assert isomorphic(k_subdivide(path(2), Edge(0, 1), 4), path(6))

    def test_triangle(self):
        assert isomorphic(k_subdivide(cycle(3), Edge(0, 1), 4), cycle(7))
        g = cycle(3)
        for e in cycle(3).edges():
            g = k_subdivide(g, e, 4)
        assert isomorphic(g, cycle(15))


class DistanceTest(unittest.TestCase):
    def test_1(self):
        assert distance(path(6), [0], [5]) == 5

    def test_2(self):
        assert distance(path(6), [2], [2]) == 0
        assert distance(path(6), [0, 1], [4, 5]) == 3

    def test_unreachable(self):
        assert distance(Graph(3, [(0, 1)]), [0], [2]) is None
        with self.assertRaises(ValueError):
            distance(path(3), [], [1])

    def test_girth(self):
        assert girth(cycle(5)) == 5
        assert girth(complete(4)) == 3
        assert girth(path(4)) is None
        assert girth(k_subdivide(cycle(4), Edge(0, 1), 4)) == 8


class GeneratorTest(unittest.TestCase):
    def test_path(self):
        assert [(e.u, e.v) for e in path(4).edges()] == [(0, 1), (1, 2), (2, 3)]

    def test_join(self):
        assert join(empty(1), empty(3)) == claw()
        assert star(3) == claw()

    def test_random_connected(self):
        g = random_connected(8, 0.3, 42)
        assert g.n == 8
        assert g.is_connected()
        assert g == random_connected(8, 0.3, 42)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            cycle(2)
        with self.assertRaises(ValueError):
            random_connected(3, 0.0)
        with self.assertRaises(ValueError):
            random_connected(3, 1.5)


def random_graphs(seed: int, count: int = 20, n_max: int = 8):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_connected(rng.randint(3, n_max), rng.uniform(0.2, 0.7), seed=rng)


class RandomGraphTest(unittest.TestCase):
    def test_contraction(self):
        for g in random_graphs(0):
            for e in g.edges():
                result = contract_edge(g, e)
                h, relabel = result.graph, result.relabel
                assert h.n == g.n - 1
                assert h.is_connected()
                merged = relabel[e.u]
                assert relabel[e.v] == merged
                union = g.neighbors(e.u) | g.neighbors(e.v)
                assert h.neighbors(merged) == {relabel[w] for w in union} - {merged}
                for w in g.vertices():
                    if w not in (e.u, e.v):
                        assert h.neighbors(relabel[w]) == {relabel[x] for x in g.neighbors(w)}

    def test_subdivision_is_undone_by_contractions(self):
        for g in random_graphs(1, count=10):
            for e in g.edges():
                for k in (1, 2, 4):
                    h = k_subdivide(g, e, k)
                    assert h.n == g.n + k
                    assert h.num_edges() == g.num_edges() + k
                    for _ in range(k):
                        h = contract_edge(h, Edge(e.u, g.n)).graph
                    assert h == g

    def test_distance(self):
        for g in random_graphs(2):
            lengths = dict(nx.all_pairs_shortest_path_length(g.to_networkx()))
            for s in g.vertices():
                for t in g.vertices():
                    assert distance(g, [s], [t]) == distance(g, [t], [s]) == lengths[s][t]
            a, b = [0, 1], [g.n - 1]
            assert distance(g, a, b) == distance(g, b, a) == min(lengths[0][g.n - 1], lengths[1][g.n - 1])
