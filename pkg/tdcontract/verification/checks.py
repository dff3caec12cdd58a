"""
The property checks run on constructed instances.
"""
import typing

from ..errors import GadgetError, SearchBudgetExceeded
from ..gadgets.claw_free import (
    CLAUSE_GADGET_TDS,
    VARIABLE_GADGET_TDS,
    clause_gadget_lower_bound,
    variable_gadget_lower_bound,
)
from ..gadgets.cnf import CnfFormula
from ..gadgets.gadget import GadgetOutput
from ..gadgets.witness import tds_witness_from_assignment
from ..graph.generators import linear_forest
from ..graph.graph import Graph
from ..graph.operations import girth
from ..graph.patterns import claw, find_induced
from ..oracle.contraction import induces_p3
from ..oracle.domination import enumerate_min_tds, is_total_dominating
from .outcome import Outcome, Status
from .property_check import PropertyCheck

SAT_KINDS = ("sat-2p4", "claw-1in3")


def forbidden_patterns(kind: str) -> typing.List[typing.Tuple[str, Graph]]:
    """
    :return: The induced subgraphs an instance of the given kind avoids.
    """
    if kind == "even-ds":
        return [("P6", linear_forest([6])), ("P5+P2", linear_forest([5, 2]))]
    if kind == "sat-2p4":
        return [("2P4", linear_forest([4, 4]))]
    if kind == "claw-1in3":
        return [("claw", claw())]
    return []


class VertexCountCheck(PropertyCheck):
    def is_applicable(self, gadget: GadgetOutput) -> bool:
        return "expected_n" in gadget.meta

    def check(
        self, gadget: GadgetOutput, budget: typing.Optional[int]
    ) -> typing.Iterable[Outcome]:
        yield self._compare("n", gadget.meta["expected_n"], gadget.graph.n)
        yield self._compare("roles", gadget.graph.n, len(set(gadget.roles.values())))


class ConnectivityCheck(PropertyCheck):
    def is_applicable(self, gadget: GadgetOutput) -> bool:
        return True

    def check(
        self, gadget: GadgetOutput, budget: typing.Optional[int]
    ) -> typing.Iterable[Outcome]:
        yield self._compare("connected", True, gadget.graph.is_connected())


class ClassMembershipCheck(PropertyCheck):
    """
    Searches the instance for the induced patterns its class forbids.
    """

    def is_applicable(self, gadget: GadgetOutput) -> bool:
        return bool(forbidden_patterns(gadget.kind))

    def check(
        self, gadget: GadgetOutput, budget: typing.Optional[int]
    ) -> typing.Iterable[Outcome]:
        for name, pattern in forbidden_patterns(gadget.kind):
            witness = find_induced(gadget.graph, pattern)
            if witness is None:
                yield self._outcome(f"{name}-free", Status.CONFIRMED, f"no induced {name}")
            else:
                yield self._outcome(
                    f"{name}-free",
                    Status.REFUTED,
                    f"induced {name} on {sorted(witness)}",
                    expected=None,
                    actual=sorted(witness),
                )


class GirthCheck(PropertyCheck):
    def is_applicable(self, gadget: GadgetOutput) -> bool:
        return "max_cycle" in gadget.meta

    def check(
        self, gadget: GadgetOutput, budget: typing.Optional[int]
    ) -> typing.Iterable[Outcome]:
        max_cycle = gadget.meta["max_cycle"]
        shortest = girth(gadget.graph)
        status = Status.CONFIRMED if shortest is None or shortest > max_cycle else Status.REFUTED
        yield self._outcome(
            "girth", status, f"shortest cycle {shortest}, forbidden up to {max_cycle}",
            expected=max_cycle, actual=shortest,
        )


class TotalDominationCheck(PropertyCheck):
    """
    Enumerates the minimum total dominating sets of the instance once and
    compares gamma_t and the P3 criterion with the promised values.
    For unsatisfiable formulas only gamma_t > target is promised.
    """

    def is_applicable(self, gadget: GadgetOutput) -> bool:
        return (
            gadget.expected_gamma_t is not None
            or gadget.expected_decision is not None
            or "target_gamma_t" in gadget.meta
        )

    def check(
        self, gadget: GadgetOutput, budget: typing.Optional[int]
    ) -> typing.Iterable[Outcome]:
        try:
            enumeration = enumerate_min_tds(gadget.graph, budget=budget)
        except SearchBudgetExceeded as e:
            for prop in ("gamma_t", "decision"):
                yield self._outcome(prop, Status.BUDGET_EXCEEDED, str(e))
            return
        assert enumeration is not None
        self.log(f"{gadget.kind}: {len(enumeration.sets)} minimum TDS of size {enumeration.size}.")
        if gadget.expected_gamma_t is not None:
            yield self._compare("gamma_t", gadget.expected_gamma_t, enumeration.size)
        elif "target_gamma_t" in gadget.meta:
            target = gadget.meta["target_gamma_t"]
            status = Status.CONFIRMED if enumeration.size > target else Status.REFUTED
            yield self._outcome(
                "gamma_t", status, f"gamma_t = {enumeration.size}, expected > {target}",
                expected=f"> {target}", actual=enumeration.size,
            )
        if gadget.expected_decision is not None:
            reducible = any(induces_p3(gadget.graph, tds) for tds in enumeration.sets)
            yield self._compare("decision", gadget.expected_decision, reducible)


class WitnessCheck(PropertyCheck):
    """
    Builds the explicit total dominating set from a satisfying assignment
    and checks its validity and size. For the claw-free instance the set
    must also be free of a P3.
    """

    def is_applicable(self, gadget: GadgetOutput) -> bool:
        return gadget.kind in SAT_KINDS and bool(gadget.meta.get("satisfiable"))

    def check(
        self, gadget: GadgetOutput, budget: typing.Optional[int]
    ) -> typing.Iterable[Outcome]:
        phi = gadget.source
        if not isinstance(phi, CnfFormula):
            msg = "Witness check needs the source formula."
            raise GadgetError(msg)
        assignment = phi.solve() if gadget.kind == "sat-2p4" else phi.solve_one_in_three()
        assert assignment is not None
        witness = tds_witness_from_assignment(gadget, assignment)
        yield self._compare("witness_tds", True, is_total_dominating(gadget.graph, witness))
        yield self._compare("witness_size", gadget.meta["target_gamma_t"], len(witness))
        if gadget.kind == "claw-1in3":
            yield self._compare("witness_p3_free", True, not induces_p3(gadget.graph, witness))


class IsolatedGadgetCheck(PropertyCheck):
    """
    Lower bounds on the vertices a total dominating set needs inside the
    isolated variable and clause gadgets of the claw-free instance.
    """

    def is_applicable(self, gadget: GadgetOutput) -> bool:
        return gadget.kind == "claw-1in3"

    def check(
        self, gadget: GadgetOutput, budget: typing.Optional[int]
    ) -> typing.Iterable[Outcome]:
        yield self._compare("variable_gadget_bound", VARIABLE_GADGET_TDS, variable_gadget_lower_bound())
        yield self._compare("clause_gadget_bound", CLAUSE_GADGET_TDS, clause_gadget_lower_bound())
