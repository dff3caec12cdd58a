"""
Exact (exponential-time) solvers that serve as ground truth.
"""
# flake8: noqa F401
from .contraction import (
    CtResult,
    ct_gamma_t,
    decide_by_definition,
    find_reducing_edge,
    has_min_tds_with_p3,
    induces_p3,
    min_tds_with_p3,
)
from .cover_search import DEFAULT_SEARCH_BUDGET, CoverSearch
from .domination import (
    TdsEnumeration,
    enumerate_min_tds,
    gamma,
    gamma_t,
    has_dominating_edge,
    is_dominating,
    is_total_dominating,
    minimum_dominating_set,
    minimum_tds,
)

__all__ = (
    "DEFAULT_SEARCH_BUDGET",
    "CoverSearch",
    "CtResult",
    "TdsEnumeration",
    "ct_gamma_t",
    "decide_by_definition",
    "enumerate_min_tds",
    "find_reducing_edge",
    "gamma",
    "gamma_t",
    "has_dominating_edge",
    "has_min_tds_with_p3",
    "induces_p3",
    "is_dominating",
    "is_total_dominating",
    "min_tds_with_p3",
    "minimum_dominating_set",
    "minimum_tds",
)
