"""
Explicit total dominating sets of the SAT-based instances, built from a
satisfying assignment of the source formula.
"""
import typing

from ..errors import GadgetError
from ..graph.graph import VertexSet
from .claw_free import clause_name, variable_name
from .cnf import Assignment, CnfFormula
from .gadget import GadgetOutput
from .two_p4 import literal_role


def _source_formula(gadget: GadgetOutput) -> CnfFormula:
    if not isinstance(gadget.source, CnfFormula):
        msg = f"A {gadget.kind} instance has no source formula."
        raise GadgetError(msg)
    return gadget.source


def _two_p4_roles(phi: CnfFormula, assignment: Assignment) -> typing.List[str]:
    roles = []
    for var in phi.variables():
        literal = var if assignment.get(var, False) else -var
        roles.extend([literal_role(literal), f"u_x{var}"])
    return roles


def _claw_free_roles(phi: CnfFormula, assignment: Assignment) -> typing.List[str]:
    roles = []
    for var in phi.variables():
        x = variable_name(var)
        clauses = [clause_name(index) for index in phi.occurrences(var)]
        if assignment.get(var, False):
            roles.extend([f"u_{x}", f"T_{x}"])
            picked = "dthj"
        else:
            roles.extend([f"u_{x}", f"F_{x}"])
            picked = "jfbd"
        roles.extend(f"{name}^{p}_{x}" for p in clauses for name in picked)
    for index, clause in enumerate(phi.clauses):
        c = clause_name(index)
        roles.append(f"v_{c}")
        for var in clause:
            x = variable_name(var)
            if assignment.get(var, False):
                roles.extend([f"c^{x}_{c}", f"a^{x}_{c}", f"g^{x}_{c}"])
            else:
                roles.extend([f"d^{x}_{c}", f"c^{x}_{c}"])
    return roles


def tds_witness_from_assignment(gadget: GadgetOutput, assignment: Assignment) -> VertexSet:
    """
    :param gadget: An instance built by build_2p4_gadget or
     build_clawfree_gadget.
    :param assignment: Truth value per variable id (missing ones are false).
     Has to satisfy the formula (with exactly one true literal per clause
     for the claw-free instance).
    :return: A total dominating set of size 2|X| resp. 14|X| + 8|C|.
    """
    phi = _source_formula(gadget)
    if gadget.kind == "sat-2p4":
        violated = phi.violated_clause(assignment)
        roles = None if violated is not None else _two_p4_roles(phi, assignment)
    elif gadget.kind == "claw-1in3":
        violated = phi.violated_clause(assignment, exactly_one=True)
        roles = None if violated is not None else _claw_free_roles(phi, assignment)
    else:
        msg = f"No witness construction for {gadget.kind} instances."
        raise GadgetError(msg)
    if roles is None:
        msg = f"The assignment violates clause {violated}: {phi.clauses[violated]}."
        raise GadgetError(msg)
    return gadget.vertices(roles)
