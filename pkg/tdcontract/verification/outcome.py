"""
Result of checking a single property of a constructed instance.
"""
import enum
import hashlib
import typing


class Status(enum.Enum):
    CONFIRMED = "Confirmed"
    REFUTED = "Refuted"
    BUDGET_EXCEEDED = "BudgetExceeded"
    ERROR = "Error"

    def __str__(self):
        return self.value


class Outcome:
    """
    A container for the outcome of a property check.
    """

    def __init__(
        self,
        check: str,
        prop: str,
        status: Status,
        message: str,
        expected: typing.Any = None,
        actual: typing.Any = None,
    ):
        self.short_id = str(hashlib.md5((check + prop).encode()).hexdigest())
        self.check = check
        self.prop = prop
        self.status = status
        self.message = message
        self.expected = expected
        self.actual = actual

    def __repr__(self):
        return f"Outcome[{self.check}:{self.prop}: {self.status} {self.message}]"

    def __eq__(self, other):
        return isinstance(other, Outcome) and other.short_id == self.short_id

    def __hash__(self):
        return hash(self.short_id)

    def serialize(self) -> dict:
        return {
            "id": self.short_id,
            "check": self.check,
            "property": self.prop,
            "status": self.status.value,
            "message": self.message,
            "expected": self.expected,
            "actual": self.actual,
        }
