"""
Runs the property checks on a constructed instance and collects the
outcomes into a report.
"""
import logging
import traceback
import typing

from ..gadgets.gadget import GadgetOutput
from ..oracle.cover_search import DEFAULT_SEARCH_BUDGET
from .checks import (
    ClassMembershipCheck,
    ConnectivityCheck,
    GirthCheck,
    IsolatedGadgetCheck,
    TotalDominationCheck,
    VertexCountCheck,
    WitnessCheck,
)
from .outcome import Outcome, Status
from .property_check import PropertyCheck
from .report import VerificationReport


class GadgetVerifier:
    def __init__(self, log: typing.Callable = print):
        self.checks: typing.List[PropertyCheck] = []
        self.log = log

    def setup_default(self) -> "GadgetVerifier":
        self.add_check(VertexCountCheck(self.log))
        self.add_check(ConnectivityCheck(self.log))
        self.add_check(ClassMembershipCheck(self.log))
        self.add_check(GirthCheck(self.log))
        self.add_check(WitnessCheck(self.log))
        self.add_check(IsolatedGadgetCheck(self.log))
        self.add_check(TotalDominationCheck(self.log))
        return self

    def add_check(self, check: PropertyCheck):
        check.log = self.log
        self.checks.append(check)

    def verify(
        self, gadget: GadgetOutput, budget: typing.Optional[int] = DEFAULT_SEARCH_BUDGET
    ) -> VerificationReport:
        outcomes: typing.List[Outcome] = []
        for check in self.checks:
            if not check.is_applicable(gadget):
                continue
            self.log(f"Running {check} on the {gadget.kind} instance...")
            try:
                outcomes.extend(check.check(gadget, budget))
            except AssertionError:
                raise
            except Exception as e:
                logging.getLogger("TdContract").error(
                    f"Exception using {check}: {e}.\n{traceback.format_exc()}"
                )
                outcomes.append(Outcome(str(check), "exception", Status.ERROR, str(e)))
        return VerificationReport(gadget, outcomes)


def verify_gadget_equivalence(
    gadget: GadgetOutput,
    budget: typing.Optional[int] = DEFAULT_SEARCH_BUDGET,
    log: typing.Callable = lambda _: None,
) -> VerificationReport:
    """
    Checks every promise of the construction within the search budget:
    vertex count, class membership, gamma_t and the decision, and the
    witness of the SAT-based instances.
    """
    return GadgetVerifier(log).setup_default().verify(gadget, budget)
