import itertools
import random
import unittest

from tdcontract.graph import (
    Graph,
    claw,
    complete,
    contains_induced,
    cycle,
    find_induced,
    is_h_free,
    linear_forest,
    p4_plus_kp3,
    path,
    random_connected,
)


class PatternTest(unittest.TestCase):
    def test_contains(self):
        assert contains_induced(cycle(6), path(4))
        assert not contains_induced(complete(4), claw())
        assert not contains_induced(cycle(5), path(5))

    def test_witness_is_induced_copy(self):
        witness = find_induced(cycle(6), path(4))
        assert witness is not None and len(witness) == 4
        assert cycle(6).induced_subgraph(witness).num_edges() == 3

    def test_free(self):
        assert is_h_free(cycle(8), [p4_plus_kp3(1)])
        assert not is_h_free(cycle(6), [path(5)])
        assert is_h_free(complete(4), [claw(), cycle(5)])

    def test_disconnected_pattern(self):
        assert contains_induced(cycle(9), linear_forest([4, 3]))
        assert not contains_induced(cycle(8), linear_forest([4, 3]))
        assert contains_induced(path(7), linear_forest([3, 3]))

    def test_trivial_patterns(self):
        assert find_induced(path(3), linear_forest([])) == frozenset()
        assert find_induced(path(3), path(4)) is None


def contains_by_enumeration(g: Graph, h: Graph) -> bool:
    for image in itertools.permutations(g.vertices(), h.n):
        if all(
            g.has_edge(image[x], image[y]) == h.has_edge(x, y)
            for x, y in itertools.combinations(range(h.n), 2)
        ):
            return True
    return False


class EnumerationAgreementTest(unittest.TestCase):
    def test_random_graphs(self):
        patterns = [path(3), path(4), claw(), cycle(4), complete(3), linear_forest([2, 2])]
        rng = random.Random(0)
        for _ in range(15):
            g = random_connected(rng.randint(4, 7), rng.uniform(0.2, 0.8), seed=rng)
            for h in patterns:
                assert contains_induced(g, h) == contains_by_enumeration(g, h)
                assert is_h_free(g, [h]) != contains_by_enumeration(g, h)
