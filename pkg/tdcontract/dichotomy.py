"""
Complexity of the contraction problem on H-free graphs, depending on H.

The problem is polynomial-time solvable on H-free graphs iff H is an induced
subgraph of P5 + tK1 or of P4 + qP3 + pK2 + tK1. Otherwise it is NP-hard or
coNP-hard. The classification follows the case analysis on the structure of
H: cycles, vertices of degree three, and the path lengths of a linear forest.
"""
import enum
import typing
from dataclasses import dataclass

from .graph.graph import Graph


class Verdict(enum.Enum):
    POLY = "Poly"
    NP_HARD = "NP-hard"
    CONP_HARD = "coNP-hard"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class HClassification:
    verdict: Verdict
    branch: str
    family: typing.Optional[typing.Dict[str, int]] = None

    def describe(self) -> str:
        return f"{self.verdict} ({self.branch} branch)"

    def serialize(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "branch": self.branch,
            "family": dict(self.family) if self.family is not None else None,
        }


def is_forest(h: Graph) -> bool:
    return h.num_edges() == h.n - len(h.components())


def linear_forest_sizes(h: Graph) -> typing.Optional[typing.List[int]]:
    """
    :return: The orders of the paths of a linear forest in decreasing order,
     or None if h is not a linear forest.
    """
    if not is_forest(h) or h.max_degree() > 2:
        return None
    return sorted((len(c) for c in h.components()), reverse=True)


def in_poly_family(sizes: typing.Sequence[int]) -> bool:
    """
    Membership of a linear forest (given by its path orders) in the
    polynomial families: at most one path has four or more vertices; that
    path is a P5 and everything else is a K1, or it is a P4 and everything
    else has at most three vertices.
    """
    large = [s for s in sizes if s >= 4]
    if not large:
        return True
    if len(large) > 1:
        return False
    rest = list(sizes)
    rest.remove(large[0])
    if large[0] == 5:
        return all(s == 1 for s in rest)
    return large[0] == 4 and all(s <= 3 for s in rest)


def classify_h(h: Graph) -> HClassification:
    if not is_forest(h):
        return HClassification(Verdict.NP_HARD, "cycle")
    if h.max_degree() >= 3:
        return HClassification(Verdict.CONP_HARD, "claw")
    sizes = linear_forest_sizes(h)
    assert sizes is not None
    if any(s >= 6 for s in sizes):
        return HClassification(Verdict.NP_HARD, "P6")
    if 5 in sizes:
        rest = list(sizes)
        rest.remove(5)
        if any(s >= 2 for s in rest):
            return HClassification(Verdict.NP_HARD, "P5+component")
        return HClassification(Verdict.POLY, "within-family", {"t": len(rest)})
    if sizes.count(4) >= 2:
        return HClassification(Verdict.CONP_HARD, "2P4")
    return HClassification(
        Verdict.POLY,
        "within-family",
        {
            "p4": sizes.count(4),
            "q": sizes.count(3),
            "p": sizes.count(2),
            "t": sizes.count(1),
        },
    )
