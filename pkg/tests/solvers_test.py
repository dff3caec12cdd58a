import unittest

from tdcontract.errors import ClassMembershipError
from tdcontract.graph import (
    Graph,
    complete,
    cycle,
    is_h_free,
    join,
    linear_forest,
    p4_plus_kp3,
    path,
)
from tdcontract.graph.generators import empty, union
from tdcontract.oracle import decide_by_definition, has_min_tds_with_p3
from tdcontract.solvers import (
    AbcPartition,
    compute_partition,
    compute_regular_cliques,
    decide_auto,
    decide_from_partition,
    decide_p4_free,
    decide_p4_kp3_free,
    decide_p5_free,
    f_bound,
    lift_plus_k1,
    select_procedure,
)


def hanging_squares(squares: int, apex: bool = False) -> Graph:
    """
    The path 0-1-2-3 with `squares` 4-cycles b-c-c'-b' hanging at it: b and
    b' are adjacent to all four path vertices, the cliques {c, c'} are not.
    Square i uses the ids 4+4i (b), 5+4i (b'), 6+4i (c), 7+4i (c'). With
    apex, one more vertex is adjacent to the four path vertices only.
    The graph is connected and (P4+P3)-free.
    """
    base = [0, 1, 2, 3]
    edges = [(0, 1), (1, 2), (2, 3)]
    for i in range(squares):
        b, b_, c, c_ = range(4 + 4 * i, 8 + 4 * i)
        edges += [(b, b_), (b, c), (c, c_), (b_, c_)]
        edges += [(x, a) for x in (b, b_) for a in base]
    n = 4 + 4 * squares
    if apex:
        edges += [(n, a) for a in base]
        n += 1
    return Graph(n, edges)


def path_partition(g: Graph) -> AbcPartition:
    a = frozenset(range(4))
    b = frozenset(v for v in g.vertices() if v not in a and g.neighbors(v) & a)
    return AbcPartition(a, b, frozenset(g.vertices()) - a - b)


class CographTest(unittest.TestCase):
    def test_1(self):
        assert not decide_p4_free(complete(4))
        assert not decide_p4_free(cycle(4))
        assert not decide_p4_free(join(complete(1), union(complete(2), empty(1))))

    def test_membership(self):
        with self.assertRaises(ClassMembershipError):
            decide_p4_free(path(4))
        with self.assertRaises(ClassMembershipError):
            decide_p4_free(Graph(3, [(0, 1)]))


class P5FreeTest(unittest.TestCase):
    def test_1(self):
        assert not decide_p5_free(complete(4))
        assert decide_p5_free(cycle(5))
        assert not decide_p5_free(path(4))

    def test_membership(self):
        with self.assertRaises(ClassMembershipError):
            decide_p5_free(cycle(6))


class P4P3FreeTest(unittest.TestCase):
    def test_f_bound(self):
        assert f_bound(4, 1) == 17
        assert f_bound(7, 2) == 51
        assert f_bound(10, 3) == 121

    def test_partition(self):
        part = compute_partition(cycle(6), 1)
        assert len(part.a) == 4 and len(part.b) == 2 and not part.c
        assert cycle(6).induced_subgraph(part.a).num_edges() == 3
        part = compute_partition(path(4), 1)
        assert part == AbcPartition(frozenset(range(4)), frozenset(), frozenset())
        assert compute_partition(cycle(4), 1) is None

    def test_regular_cliques(self):
        g = hanging_squares(2)
        cliques = compute_regular_cliques(g, path_partition(g), 1)
        assert cliques.all_cliques == [frozenset({6, 7}), frozenset({10, 11})]
        assert cliques.regular == [frozenset({6, 7}), frozenset({10, 11})]
        g = hanging_squares(1)
        cliques = compute_regular_cliques(g, path_partition(g), 1)
        assert cliques.kprime == [frozenset({6, 7})]
        assert cliques.regular == []

    def test_single_vertex_cliques_are_no_candidates(self):
        # the attachment vertex is complete to a singleton
        g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])
        part = AbcPartition(frozenset(range(4)), frozenset({4}), frozenset({5}))
        cliques = compute_regular_cliques(g, part, 1)
        assert cliques.all_cliques == [frozenset({5})]
        assert cliques.kprime == []

    def test_regular_cliques_without_c(self):
        part = compute_partition(cycle(6), 1)
        cliques = compute_regular_cliques(cycle(6), part, 1)
        assert cliques.all_cliques == [] and cliques.regular == []

    def test_decide(self):
        assert decide_p4_kp3_free(cycle(6), 1)
        assert not decide_p4_kp3_free(cycle(8), 1)
        assert not decide_p4_kp3_free(complete(2), 1)
        assert decide_p4_kp3_free(cycle(5), 1)

    def test_without_regular_cliques(self):
        g = hanging_squares(1)
        assert decide_from_partition(g, path_partition(g), 1) == (False, "1 (P3 criterion)")
        assert not decide_by_definition(g)

    def test_regular_cliques_cover_everything(self):
        g = hanging_squares(2)
        assert is_h_free(g, [p4_plus_kp3(1)])
        assert decide_from_partition(g, path_partition(g), 1) == (False, "3")
        # all minimum total dominating sets induce matchings
        assert not has_min_tds_with_p3(g)
        assert not decide_by_definition(g)
        assert not decide_p4_kp3_free(g, 1)

    def test_remainder_dominated_from_v1(self):
        g = hanging_squares(2, apex=True)
        assert is_h_free(g, [p4_plus_kp3(1)])
        assert decide_from_partition(g, path_partition(g), 1) == (True, "5 (V1)")
        assert decide_by_definition(g)
        assert decide_p4_kp3_free(g, 1)

    def test_membership(self):
        with self.assertRaises(ClassMembershipError):
            decide_p4_kp3_free(cycle(9), 1)


class LiftingTest(unittest.TestCase):
    def test_1(self):
        assert lift_plus_k1(cycle(5), path(5), decide_p5_free)
        assert not lift_plus_k1(path(4), path(5), decide_p5_free)
        assert not lift_plus_k1(
            cycle(8), p4_plus_kp3(1), lambda g: decide_p4_kp3_free(g, 1)
        )

    def test_copy_present(self):
        # P5 itself is (P5+K1)-free, its dominating copy decides
        assert lift_plus_k1(path(5), path(5), decide_p5_free)
        assert lift_plus_k1(cycle(6), path(5), decide_p5_free)


class DispatchTest(unittest.TestCase):
    def test_select(self):
        assert select_procedure(path(5))[0] == "(P5+0K1)-free"
        assert select_procedure(linear_forest([5, 1, 1]))[0] == "(P5+2K1)-free"
        assert select_procedure(linear_forest([4, 3]))[0] == "(P4+1P3)-free"
        assert select_procedure(path(4))[0] == "P4-free"
        assert select_procedure(linear_forest([4, 4])) is None
        assert select_procedure(cycle(4)) is None

    def test_auto(self):
        assert decide_auto(cycle(5), path(5))
        assert not decide_auto(cycle(8), p4_plus_kp3(1))
        assert decide_auto(cycle(6))
        assert decide_auto(cycle(6), path(5))
