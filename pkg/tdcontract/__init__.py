"""
A library for the question whether edge contractions reduce the total
domination number of a graph: exact oracle, polynomial-time solvers for
restricted graph classes, hardness instances and the classification of
H-free graph classes.
"""
# flake8: noqa F401
from .dichotomy import HClassification, Verdict, classify_h
from .gadgets import GadgetOutput
from .graph import Edge, Graph
from .oracle import ct_gamma_t, decide_by_definition, gamma_t, has_min_tds_with_p3
from .solvers import decide_auto
from .verification import verify_gadget_equivalence

__all__ = (
    "Edge",
    "GadgetOutput",
    "Graph",
    "HClassification",
    "Verdict",
    "classify_h",
    "ct_gamma_t",
    "decide_auto",
    "decide_by_definition",
    "gamma_t",
    "has_min_tds_with_p3",
    "verify_gadget_equivalence",
)
