import abc
import typing

from ..gadgets.gadget import GadgetOutput
from .outcome import Outcome, Status


class PropertyCheck(abc.ABC):
    def __init__(self, log: typing.Callable = print):
        self.log = log

    @abc.abstractmethod
    def check(
        self, gadget: GadgetOutput, budget: typing.Optional[int]
    ) -> typing.Iterable[Outcome]:
        pass

    @abc.abstractmethod
    def is_applicable(self, gadget: GadgetOutput) -> bool:
        pass

    def _outcome(
        self,
        prop: str,
        status: Status,
        message: str,
        expected: typing.Any = None,
        actual: typing.Any = None,
    ) -> Outcome:
        return Outcome(str(self), prop, status, message, expected, actual)

    def _compare(self, prop: str, expected: typing.Any, actual: typing.Any) -> Outcome:
        if expected == actual:
            return self._outcome(prop, Status.CONFIRMED, f"{prop} = {actual}", expected, actual)
        return self._outcome(
            prop, Status.REFUTED, f"{prop} is {actual}, expected {expected}", expected, actual
        )

    def __str__(self):
        return self.__class__.__name__
