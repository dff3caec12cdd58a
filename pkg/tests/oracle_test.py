import random
import unittest

from tdcontract.errors import (
    ClassMembershipError,
    NoTotalDominatingSetError,
    SearchBudgetExceeded,
)
from tdcontract.graph import (
    Edge,
    Graph,
    complete,
    contract_edge,
    cycle,
    path,
    random_connected,
    star,
)
from tdcontract.graph.graph import to_mask
from tdcontract.oracle import (
    CoverSearch,
    ct_gamma_t,
    decide_by_definition,
    enumerate_min_tds,
    find_reducing_edge,
    gamma,
    gamma_t,
    has_dominating_edge,
    has_min_tds_with_p3,
    induces_p3,
    is_dominating,
    is_total_dominating,
    min_tds_with_p3,
    minimum_tds,
)


class TotalDominationTest(unittest.TestCase):
    def test_gamma_t(self):
        assert gamma_t(path(4)) == 2
        assert gamma_t(cycle(8)) == 4
        assert gamma_t(cycle(15)) == 8
        assert gamma_t(cycle(5)) == 3
        assert gamma_t(complete(5)) == 2

    def test_no_tds(self):
        assert gamma_t(Graph(1)) is None
        assert gamma_t(Graph(3, [(0, 1)])) is None
        with self.assertRaises(ValueError):
            gamma_t(Graph(0))
        with self.assertRaises(ValueError):
            minimum_tds(Graph(0))

    def test_witness(self):
        for g in (path(7), cycle(9), star(4)):
            tds = minimum_tds(g)
            assert tds is not None
            assert is_total_dominating(g, tds)
            assert len(tds) == gamma_t(g)

    def test_predicates(self):
        assert is_total_dominating(path(4), [1, 2])
        assert not is_total_dominating(path(3), [0, 2])
        assert is_dominating(path(3), [1])
        assert not is_total_dominating(path(3), [1])

    def test_gamma(self):
        assert gamma(path(10)) == 4
        assert gamma(complete(5)) == 1
        assert gamma(cycle(4)) == 2


class EnumerationTest(unittest.TestCase):
    def test_k2(self):
        result = enumerate_min_tds(complete(2))
        assert result.size == 2
        assert result.sets == [frozenset({0, 1})]

    def test_p3(self):
        result = enumerate_min_tds(path(3))
        assert result.size == 2
        assert result.sets == [frozenset({0, 1}), frozenset({1, 2})]

    def test_c4(self):
        result = enumerate_min_tds(cycle(4))
        assert result.size == 2
        assert [sorted(s) for s in result.sets] == [[0, 1], [0, 3], [1, 2], [2, 3]]
        assert result.serialize() == {"size": 2, "sets": [[0, 1], [0, 3], [1, 2], [2, 3]]}

    def test_all_sets_are_minimum(self):
        g = cycle(10)
        result = enumerate_min_tds(g)
        assert result.size == gamma_t(g)
        assert len(set(result.sets)) == len(result.sets)
        for tds in result.sets:
            assert len(tds) == result.size
            assert is_total_dominating(g, tds)

    def test_max_size(self):
        assert enumerate_min_tds(cycle(8), max_size=3) is None
        assert enumerate_min_tds(cycle(8), max_size=4).size == 4

    def test_errors(self):
        with self.assertRaises(NoTotalDominatingSetError):
            enumerate_min_tds(Graph(1))
        with self.assertRaises(NoTotalDominatingSetError):
            enumerate_min_tds(Graph(0))
        with self.assertRaises(SearchBudgetExceeded):
            enumerate_min_tds(cycle(8), budget=1)


class CoverSearchTest(unittest.TestCase):
    def test_restricted_targets(self):
        g = path(5)
        search = CoverSearch(g, targets=to_mask([0, 4]))
        assert search.minimum() == to_mask([1, 3])
        assert search.exists(2)
        assert not search.exists(1)

    def test_infeasible(self):
        search = CoverSearch(Graph(2, [(0, 1)]), targets=to_mask([0]), candidates=to_mask([0]))
        assert not search.is_feasible()
        assert search.minimum() is None
        assert search.greedy() is None


class CriterionTest(unittest.TestCase):
    def test_has_min_tds_with_p3(self):
        assert has_min_tds_with_p3(path(6))
        assert not has_min_tds_with_p3(cycle(8))
        assert not has_min_tds_with_p3(complete(2))

    def test_witness_contains_p3(self):
        tds = min_tds_with_p3(path(6))
        assert tds == frozenset({1, 2, 3, 4})
        assert induces_p3(path(6), tds)

    def test_definition(self):
        assert decide_by_definition(cycle(6))
        assert not decide_by_definition(complete(2))
        assert not decide_by_definition(path(3))

    def test_reducing_edge(self):
        e = find_reducing_edge(cycle(6))
        assert e == Edge(0, 1)
        assert find_reducing_edge(cycle(8)) is None

    def test_disconnected(self):
        with self.assertRaises(ClassMembershipError):
            decide_by_definition(Graph(4, [(0, 1), (2, 3)]))

    def test_criterion_matches_definition(self):
        for g in (path(5), path(6), path(7), cycle(5), cycle(7), cycle(9), star(4)):
            assert decide_by_definition(g) == has_min_tds_with_p3(g), g


class ContractionNumberTest(unittest.TestCase):
    def test_1(self):
        assert ct_gamma_t(cycle(6)).value == 1

    def test_2(self):
        assert ct_gamma_t(cycle(8)).value == 2

    def test_irreducible(self):
        result = ct_gamma_t(complete(2))
        assert result.is_irreducible
        assert str(result) == "IRREDUCIBLE"


class DominatingEdgeTest(unittest.TestCase):
    def test_1(self):
        assert has_dominating_edge(path(4)) == Edge(1, 2)
        assert has_dominating_edge(star(3)) == Edge(0, 1)
        assert has_dominating_edge(cycle(6)) is None


class RandomGraphTest(unittest.TestCase):
    def graphs(self, seed: int, count: int = 20):
        rng = random.Random(seed)
        for _ in range(count):
            yield random_connected(rng.randint(3, 8), rng.uniform(0.2, 0.7), seed=rng)

    def test_contraction_lowers_by_at_most_one(self):
        for g in self.graphs(0):
            value = gamma_t(g)
            for e in g.edges():
                assert value - 1 <= gamma_t(contract_edge(g, e).graph) <= value

    def test_bounds_by_gamma(self):
        for g in self.graphs(1):
            assert gamma(g) <= gamma_t(g) <= 2 * gamma(g)

    def test_dominating_edge(self):
        for g in self.graphs(2):
            assert (has_dominating_edge(g) is not None) == (gamma_t(g) == 2)

    def test_decision_is_one_contraction(self):
        for g in self.graphs(3, count=15):
            assert decide_by_definition(g) == (ct_gamma_t(g, max_depth=1).value == 1)
            assert decide_by_definition(g) == has_min_tds_with_p3(g)
