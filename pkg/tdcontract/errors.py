"""
The exceptions raised by tdcontract. Every library error derives from
`TdContractError` such that callers (e.g., the CLI) can catch them at once.
"""
import typing


class TdContractError(Exception):
    pass


class InvalidEdgeError(TdContractError, ValueError):
    """
    The edge is a loop, out of range, or not part of the graph.
    """


class GraphFormatError(TdContractError, ValueError):
    def __init__(self, message: str, line: typing.Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CnfFormatError(TdContractError, ValueError):
    def __init__(self, message: str, line: typing.Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NoTotalDominatingSetError(TdContractError):
    """
    The graph has an isolated vertex and, thus, no total dominating set.
    """


class SearchBudgetExceeded(TdContractError):
    """
    The exact search visited more nodes than allowed.
    """

    def __init__(self, budget: int, explored: int):
        self.budget = budget
        self.explored = explored
        super().__init__(f"Search budget of {budget} nodes exceeded ({explored}).")


class ClassMembershipError(TdContractError, ValueError):
    """
    The input does not belong to the graph class a solver is restricted to.
    """


class PromiseError(TdContractError, ValueError):
    """
    The domination-number promise of a reduction could not be established.
    """


class GadgetError(TdContractError, ValueError):
    pass
