"""
CNF formulas in DIMACS notation: variables are 1..num_vars, a literal is a
signed variable id. Satisfiability (also under exactly-one-true semantics)
is checked with pysat.
"""
import re
import typing
from dataclasses import dataclass
from pathlib import Path

from pysat.card import CardEnc, EncType
from pysat.solvers import Solver

from ..errors import CnfFormatError, GadgetError

Assignment = typing.Mapping[int, bool]

_HEADER = re.compile(r"^p\s+cnf\s+(?P<vars>\d+)\s+(?P<clauses>\d+)$")


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: typing.Tuple[typing.Tuple[int, ...], ...]

    def __post_init__(self):
        clauses = tuple(tuple(clause) for clause in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for index, clause in enumerate(clauses):
            for literal in clause:
                if literal == 0 or abs(literal) > self.num_vars:
                    msg = f"Literal {literal} of clause {index} is out of range 1..{self.num_vars}."
                    raise GadgetError(msg)

    @classmethod
    def from_dimacs(cls, text: str) -> "CnfFormula":
        """
        Parses DIMACS cnf: comment lines start with 'c', the header is
        'p cnf V C', clauses are 0-terminated and may span lines. A line
        starting with '%' ends the formula.
        """
        header: typing.Optional[typing.Tuple[int, int]] = None
        clauses: typing.List[typing.Tuple[int, ...]] = []
        current: typing.List[int] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            if line.startswith("%"):
                break
            if line.startswith("p"):
                match = _HEADER.fullmatch(line)
                if header is not None or not match:
                    msg = f"Invalid problem line '{line}'."
                    raise CnfFormatError(msg, number)
                header = (int(match.group("vars")), int(match.group("clauses")))
                continue
            if header is None:
                msg = "Clause before the 'p cnf' header."
                raise CnfFormatError(msg, number)
            for token in line.split():
                try:
                    literal = int(token)
                except ValueError:
                    msg = f"Invalid literal '{token}'."
                    raise CnfFormatError(msg, number) from None
                if literal == 0:
                    clauses.append(tuple(current))
                    current = []
                    continue
                if abs(literal) > header[0]:
                    msg = f"Variable {abs(literal)} exceeds the declared {header[0]}."
                    raise CnfFormatError(msg, number)
                current.append(literal)
        if header is None:
            msg = "Missing 'p cnf' header."
            raise CnfFormatError(msg)
        if current:
            msg = "Last clause is not terminated by 0."
            raise CnfFormatError(msg)
        if len(clauses) != header[1]:
            msg = f"Header announces {header[1]} clauses but {len(clauses)} were given."
            raise CnfFormatError(msg)
        return cls(header[0], tuple(clauses))

    @classmethod
    def read(cls, path: typing.Union[str, Path]) -> "CnfFormula":
        with Path(path).open() as file:
            return cls.from_dimacs(file.read())

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines.extend(" ".join(str(literal) for literal in clause) + " 0" for clause in self.clauses)
        return "\n".join(lines) + "\n"

    def variables(self) -> range:
        return range(1, self.num_vars + 1)

    def occurrences(self, var: int) -> typing.List[int]:
        """
        :return: Indices of the clauses containing the variable (any sign),
         with multiplicity.
        """
        return [
            index
            for index, clause in enumerate(self.clauses)
            for literal in clause
            if abs(literal) == var
        ]

    def violated_clause(
        self, assignment: Assignment, exactly_one: bool = False
    ) -> typing.Optional[int]:
        """
        :param assignment: Truth values of the variables (missing ones are false).
        :param exactly_one: Require exactly one true literal per clause.
        :return: Index of the first violated clause, or None.
        """
        for index, clause in enumerate(self.clauses):
            true_literals = sum(
                1 for literal in set(clause) if assignment.get(abs(literal), False) == (literal > 0)
            )
            if true_literals == 0 or (exactly_one and true_literals != 1):
                return index
        return None

    def solve(self) -> typing.Optional[typing.Dict[int, bool]]:
        """
        :return: A satisfying assignment or None.
        """
        return self._solve([list(clause) for clause in self.clauses])

    def solve_one_in_three(self) -> typing.Optional[typing.Dict[int, bool]]:
        """
        :return: An assignment with exactly one true literal per clause, or
         None.
        """
        encoded: typing.List[typing.List[int]] = []
        for clause in self.clauses:
            literals = sorted(set(clause))
            cardinality = CardEnc.equals(lits=literals, bound=1, encoding=EncType.pairwise)
            encoded.extend(cardinality.clauses)
        return self._solve(encoded)

    def _solve(
        self, clauses: typing.List[typing.List[int]]
    ) -> typing.Optional[typing.Dict[int, bool]]:
        with Solver(name="g3", bootstrap_with=clauses) as solver:
            if not solver.solve():
                return None
            model = solver.get_model() or []
        values = {abs(literal): literal > 0 for literal in model}
        return {var: values.get(var, False) for var in self.variables()}

    def require_positive_cubic(self) -> None:
        """
        Checks the input conditions of the positive cubic 1-in-3 reduction:
        only positive literals, three distinct variables per clause, and
        every variable in exactly three clauses.
        """
        for index, clause in enumerate(self.clauses):
            if any(literal < 0 for literal in clause):
                msg = f"Clause {index} contains a negated literal."
                raise GadgetError(msg)
            if len(clause) != 3 or len(set(clause)) != 3:
                msg = f"Clause {index} does not consist of three distinct variables."
                raise GadgetError(msg)
        for var in self.variables():
            count = len(self.occurrences(var))
            if count != 3:
                msg = f"Variable {var} occurs {count} times instead of three."
                raise GadgetError(msg)
