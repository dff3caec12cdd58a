import unittest

import networkx as nx

from tdcontract.dichotomy import (
    Verdict,
    classify_h,
    in_poly_family,
    is_forest,
    linear_forest_sizes,
)
from tdcontract.graph import Graph, claw, cycle, linear_forest, path


class ClassifyTest(unittest.TestCase):
    def test_examples(self):
        assert classify_h(linear_forest([5, 1, 1])).verdict == Verdict.POLY
        assert classify_h(linear_forest([4, 4])).verdict == Verdict.CONP_HARD
        assert classify_h(cycle(4)).verdict == Verdict.NP_HARD
        assert classify_h(claw()).verdict == Verdict.CONP_HARD
        assert classify_h(linear_forest([5, 2])).verdict == Verdict.NP_HARD
        assert classify_h(linear_forest([4, 3, 3, 2, 1])).verdict == Verdict.POLY

    def test_branches(self):
        assert classify_h(claw()).describe() == "coNP-hard (claw branch)"
        assert classify_h(cycle(3)).branch == "cycle"
        assert classify_h(path(6)).branch == "P6"
        assert classify_h(linear_forest([5, 2])).branch == "P5+component"
        assert classify_h(linear_forest([4, 4])).branch == "2P4"

    def test_family(self):
        result = classify_h(linear_forest([4, 3, 3, 2, 1]))
        assert result.family == {"p4": 1, "q": 2, "p": 1, "t": 1}
        assert classify_h(linear_forest([5, 1, 1])).family == {"t": 2}
        assert result.serialize()["verdict"] == "Poly"

    def test_empty_pattern(self):
        assert classify_h(Graph(0)).verdict == Verdict.POLY

    def test_linear_forests(self):
        assert linear_forest_sizes(linear_forest([2, 5, 1])) == [5, 2, 1]
        assert linear_forest_sizes(claw()) is None
        assert linear_forest_sizes(cycle(5)) is None
        assert is_forest(claw()) and not is_forest(cycle(3))

    def test_poly_family(self):
        assert in_poly_family([5, 1, 1, 1])
        assert in_poly_family([4, 3, 3, 2, 2, 1])
        assert in_poly_family([3, 3, 3])
        assert not in_poly_family([5, 2])
        assert not in_poly_family([4, 4])
        assert not in_poly_family([6])

    def test_exhaustive_small_graphs(self):
        for atlas_graph in nx.graph_atlas_g()[1:]:
            h = Graph.from_networkx(atlas_graph)
            result = classify_h(h)
            sizes = linear_forest_sizes(h)
            poly_family = sizes is not None and in_poly_family(sizes)
            assert (result.verdict == Verdict.POLY) == poly_family, h
            assert result.branch in (
                "cycle", "claw", "P6", "P5+component", "2P4", "within-family"
            )
