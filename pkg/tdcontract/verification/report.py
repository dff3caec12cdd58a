import typing

from ..gadgets.gadget import GadgetOutput
from .outcome import Outcome, Status


class VerificationReport:
    """
    The outcomes of all property checks run on one instance.
    """

    def __init__(self, gadget: GadgetOutput, outcomes: typing.List[Outcome]):
        self.gadget = gadget
        self.outcomes = outcomes

    def get_outcomes(self, status: typing.Optional[Status] = None) -> typing.List[Outcome]:
        if status is None:
            return list(self.outcomes)
        return [o for o in self.outcomes if o.status == status]

    def is_refuted(self) -> bool:
        return any(o.status in (Status.REFUTED, Status.ERROR) for o in self.outcomes)

    def is_confirmed(self) -> bool:
        return all(o.status == Status.CONFIRMED for o in self.outcomes)

    def verdict(self) -> str:
        """
        CONFIRMED if every property holds, REFUTED if one fails, and
        INCOMPLETE if some could not be decided within the budget.
        """
        if self.is_refuted():
            return "REFUTED"
        if self.is_confirmed():
            return "CONFIRMED"
        return "INCOMPLETE"

    def serialize(self) -> dict:
        return {
            "gadget": self.gadget.serialize(),
            "verdict": self.verdict(),
            "outcomes": [o.serialize() for o in self.outcomes],
        }
