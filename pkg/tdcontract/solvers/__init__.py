"""
Polynomial-time decision procedures for restricted graph classes.
"""
# flake8: noqa F401
from .cograph import decide_p4_free
from .dispatch import decide_auto, select_procedure
from .lifting import lift_plus_k1
from .membership import MEMBERSHIP_CHECK_LIMIT
from .p4_kp3_free import (
    AbcPartition,
    RegularCliqueSet,
    compute_partition,
    compute_regular_cliques,
    decide_from_partition,
    decide_p4_kp3_free,
    f_bound,
)
from .p5_free import decide_p5_free

__all__ = (
    "MEMBERSHIP_CHECK_LIMIT",
    "AbcPartition",
    "RegularCliqueSet",
    "compute_partition",
    "compute_regular_cliques",
    "decide_auto",
    "decide_from_partition",
    "decide_p4_free",
    "decide_p4_kp3_free",
    "decide_p5_free",
    "f_bound",
    "lift_plus_k1",
    "select_procedure",
)
