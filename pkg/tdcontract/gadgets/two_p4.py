"""
Instance for 2P4-free graphs from a 3-CNF formula. Every variable x gets
the literal vertices x and ~x and the vertices u_x, v_x with the edges
x-~x, x-u_x, ~x-u_x and u_x-v_x. Every clause gets a vertex adjacent to the
literal vertices of its literals, and the clause vertices form a clique.
The formula is satisfiable iff gamma_t = 2|X| iff the graph is a
no-instance.
"""
from ..errors import GadgetError
from .cnf import CnfFormula
from .gadget import GadgetBuilder, GadgetOutput


def literal_role(literal: int) -> str:
    return f"x{literal}" if literal > 0 else f"~x{-literal}"


def clause_role(index: int) -> str:
    return f"clause[{index}]"


def build_2p4_gadget(phi: CnfFormula) -> GadgetOutput:
    if not phi.clauses or phi.num_vars < 1:
        msg = "The formula is empty."
        raise GadgetError(msg)
    for index, clause in enumerate(phi.clauses):
        if not 1 <= len(clause) <= 3:
            msg = f"Clause {index} has {len(clause)} literals; expected one to three."
            raise GadgetError(msg)
    for var in phi.variables():
        if not phi.occurrences(var):
            msg = f"Variable {var} occurs in no clause."
            raise GadgetError(msg)

    builder = GadgetBuilder()
    for var in phi.variables():
        positive, negative = literal_role(var), literal_role(-var)
        u, v = f"u_x{var}", f"v_x{var}"
        builder.vertices([positive, negative, u, v])
        builder.clique([positive, negative, u])
        builder.edge(u, v)
    clauses = [clause_role(index) for index in range(len(phi.clauses))]
    builder.vertices(clauses)
    builder.clique(clauses)
    for index, clause in enumerate(phi.clauses):
        for literal in set(clause):
            builder.edge(clauses[index], literal_role(literal))

    satisfiable = phi.solve() is not None
    meta = {
        "expected_n": 4 * phi.num_vars + len(phi.clauses),
        "target_gamma_t": 2 * phi.num_vars,
        "satisfiable": satisfiable,
        "expected_decision": not satisfiable,
    }
    if satisfiable:
        meta["expected_gamma_t"] = 2 * phi.num_vars
    return builder.build("sat-2p4", meta, source=phi)
