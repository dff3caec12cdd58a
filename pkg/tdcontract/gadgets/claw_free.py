"""
Instance for claw-free graphs from a positive cubic formula under
exactly-one-true semantics.

A variable x in the clauses c, c', c'' gets u_x, v_x, T_x, F_x (u-v, u-T,
u-F, T-F) and two wings of three branches each. The T-branch for clause p
is T-a^p-b^p with the triangle b^p, c^p, d^p and the pendant path d^p-t^p;
the F-branch is F-g^p-h^p with the triangle h^p, i^p, j^p and j^p-f^p. The
a-vertices and the g-vertices form cliques.

A clause c over x, y, z gets a T-part (u_c adjacent to a^l_c, the clique on
the a-vertices, triangles a-b-c, and the path c-d-t) and an F-part (v_c
with the pendant w_c, adjacent to g^l_c, the clique on the g-vertices, and
g^l_c-f^l_c). Finally t^c_x ~ t^x_c and f^c_x ~ f^x_c for every occurrence.

The formula is satisfiable iff gamma_t = 14|X| + 8|C| iff the graph is a
no-instance.
"""
import typing

from ..errors import GadgetError
from ..graph.graph import popcount, to_mask
from ..oracle.cover_search import CoverSearch
from .cnf import CnfFormula
from .gadget import GadgetBuilder, GadgetOutput

VARIABLE_GADGET_SIZE = 34
CLAUSE_GADGET_SIZE = 24
VARIABLE_GADGET_TDS = 14
CLAUSE_GADGET_TDS = 8


def variable_name(var: int) -> str:
    return f"x{var}"


def clause_name(index: int) -> str:
    return f"c{index}"


def add_variable_gadget(
    builder: GadgetBuilder, x: str, clauses: typing.Sequence[str]
) -> typing.List[str]:
    """
    Adds the gadget of variable x occurring in the three given clauses.
    :return: The boundary roles (t^p_x and f^p_x).
    """
    u, v, true, false = f"u_{x}", f"v_{x}", f"T_{x}", f"F_{x}"
    builder.vertices([u, v, true, false])
    builder.edge(u, v)
    builder.clique([u, true, false])
    boundary = []
    for hub, names in ((true, "abcdt"), (false, "ghijf")):
        heads = []
        for p in clauses:
            head, mid, left, right, tail = (f"{name}^{p}_{x}" for name in names)
            builder.vertices([head, mid, left, right, tail])
            builder.edge(hub, head)
            builder.edge(head, mid)
            builder.clique([mid, left, right])
            builder.edge(right, tail)
            heads.append(head)
            boundary.append(tail)
        builder.clique(heads)
    return boundary


def add_clause_gadget(
    builder: GadgetBuilder, c: str, variables: typing.Sequence[str]
) -> typing.List[str]:
    """
    Adds the gadget of clause c over the three given variables.
    :return: The boundary roles (t^l_c and f^l_c).
    """
    u, v, w = f"u_{c}", f"v_{c}", f"w_{c}"
    builder.vertices([u, v, w])
    builder.edge(v, w)
    a_heads, g_heads, boundary = [], [], []
    for x in variables:
        a, b, cc, d, t = (f"{name}^{x}_{c}" for name in "abcdt")
        builder.vertices([a, b, cc, d, t])
        builder.edge(u, a)
        builder.clique([a, b, cc])
        builder.path(cc, d, t)
        g, f = f"g^{x}_{c}", f"f^{x}_{c}"
        builder.vertices([g, f])
        builder.edge(v, g)
        builder.edge(g, f)
        a_heads.append(a)
        g_heads.append(g)
        boundary.extend([t, f])
    builder.clique(a_heads)
    builder.clique(g_heads)
    return boundary


def build_clawfree_gadget(phi: CnfFormula) -> GadgetOutput:
    """
    :param phi: A positive cubic formula (three distinct variables per
     clause, every variable in three clauses).
    :return: The instance with roles as in the module description, variables
     named x1.. and clauses c0...
    """
    if not phi.clauses:
        msg = "The formula is empty."
        raise GadgetError(msg)
    phi.require_positive_cubic()
    builder = GadgetBuilder()
    for var in phi.variables():
        clauses = [clause_name(index) for index in phi.occurrences(var)]
        add_variable_gadget(builder, variable_name(var), clauses)
    for index, clause in enumerate(phi.clauses):
        add_clause_gadget(builder, clause_name(index), [variable_name(var) for var in clause])
    for index, clause in enumerate(phi.clauses):
        c = clause_name(index)
        for var in clause:
            x = variable_name(var)
            builder.edge(f"t^{c}_{x}", f"t^{x}_{c}")
            builder.edge(f"f^{c}_{x}", f"f^{x}_{c}")

    satisfiable = phi.solve_one_in_three() is not None
    target = VARIABLE_GADGET_TDS * phi.num_vars + CLAUSE_GADGET_TDS * len(phi.clauses)
    meta = {
        "expected_n": VARIABLE_GADGET_SIZE * phi.num_vars + CLAUSE_GADGET_SIZE * len(phi.clauses),
        "target_gamma_t": target,
        "satisfiable": satisfiable,
        "expected_decision": not satisfiable,
    }
    if satisfiable:
        meta["expected_gamma_t"] = target
    return builder.build("claw-1in3", meta, source=phi)


def _isolated_lower_bound(builder: GadgetBuilder, boundary: typing.List[str]) -> int:
    gadget = builder.build("isolated", require_connected=False)
    targets = gadget.graph.vertex_mask & ~to_mask(gadget.vertices(boundary))
    cover = CoverSearch(gadget.graph, targets=targets).minimum()
    assert cover is not None
    return popcount(cover)


def variable_gadget_lower_bound() -> int:
    """
    Minimum number of vertices of an isolated variable gadget that totally
    dominate it when its boundary vertices are dominated from outside.
    """
    builder = GadgetBuilder()
    boundary = add_variable_gadget(builder, "x", ["c", "c'", "c''"])
    return _isolated_lower_bound(builder, boundary)


def clause_gadget_lower_bound() -> int:
    """
    Same as variable_gadget_lower_bound for an isolated clause gadget.
    """
    builder = GadgetBuilder()
    boundary = add_clause_gadget(builder, "c", ["x", "y", "z"])
    return _isolated_lower_bound(builder, boundary)
