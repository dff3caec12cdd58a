"""
Constructed instances together with the role of every vertex, e.g.,
"u_x3" or "t^c0_x3", and the values the construction promises.
"""
import itertools
import re
import typing
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import GadgetError, GraphFormatError
from ..graph.graph import Graph

_ROLE_LINE = re.compile(r"^(?P<role>\S+)\s+(?P<vertex>\d+)$")


@dataclass(frozen=True)
class GadgetOutput:
    """
    :param graph: The constructed graph.
    :param roles: Role name to vertex id. Injective, covers every vertex.
    :param kind: The construction, e.g., "even-ds" or "claw-1in3".
    :param meta: Expectations such as "expected_gamma_t" and
     "expected_decision" (None if unknown).
    :param source: The source instance (a graph or a formula).
    """

    graph: Graph
    roles: typing.Dict[str, int]
    kind: str
    meta: typing.Dict[str, typing.Any] = field(default_factory=dict)
    source: typing.Any = None

    def vertex(self, role: str) -> int:
        return self.roles[role]

    def vertices(self, roles: typing.Iterable[str]) -> typing.FrozenSet[int]:
        return frozenset(self.roles[role] for role in roles)

    def role_of(self, vertex: int) -> str:
        for role, v in self.roles.items():
            if v == vertex:
                return role
        raise KeyError(vertex)

    @property
    def expected_gamma_t(self) -> typing.Optional[int]:
        return self.meta.get("expected_gamma_t")

    @property
    def expected_decision(self) -> typing.Optional[bool]:
        return self.meta.get("expected_decision")

    def format_role_map(self) -> str:
        return "".join(
            f"{role} {vertex}\n"
            for role, vertex in sorted(self.roles.items(), key=lambda item: item[1])
        )

    def write_role_map(self, path: typing.Union[str, Path]) -> None:
        with Path(path).open("w") as file:
            file.write(self.format_role_map())

    def serialize(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.graph.n,
            "m": self.graph.num_edges(),
            "meta": {k: v for k, v in self.meta.items() if isinstance(v, (int, bool, str, type(None)))},
        }


def read_role_map(path: typing.Union[str, Path]) -> typing.Dict[str, int]:
    """
    Reads a role map sidecar: one "role vertex-id" pair per line.
    """
    roles: typing.Dict[str, int] = {}
    with Path(path).open() as file:
        for number, line in enumerate(file.readlines(), start=1):
            if not line.strip():
                continue
            match = _ROLE_LINE.fullmatch(line.strip())
            if not match:
                msg = f"Expected 'role vertex-id', got '{line.strip()}'."
                raise GraphFormatError(msg, number)
            roles[match.group("role")] = int(match.group("vertex"))
    return roles


class GadgetBuilder:
    """
    Collects named vertices and edges between them.
    """

    def __init__(self):
        self._roles: typing.Dict[str, int] = {}
        self._edges: typing.List[typing.Tuple[int, int]] = []

    def vertex(self, role: str) -> int:
        if role in self._roles:
            msg = f"Role {role} is used twice."
            raise GadgetError(msg)
        self._roles[role] = len(self._roles)
        return self._roles[role]

    def vertices(self, roles: typing.Iterable[str]) -> None:
        for role in roles:
            self.vertex(role)

    def edge(self, first: str, second: str) -> None:
        self._edges.append((self._roles[first], self._roles[second]))

    def path(self, *roles: str) -> None:
        for first, second in zip(roles, roles[1:]):
            self.edge(first, second)

    def clique(self, roles: typing.Iterable[str]) -> None:
        for first, second in itertools.combinations(list(roles), 2):
            self.edge(first, second)

    def complete_to(self, role: str, others: typing.Iterable[str]) -> None:
        for other in others:
            self.edge(role, other)

    def build(
        self,
        kind: str,
        meta: typing.Optional[typing.Dict[str, typing.Any]] = None,
        source: typing.Any = None,
        require_connected: bool = True,
    ) -> GadgetOutput:
        graph = Graph(len(self._roles), self._edges)
        if require_connected and not graph.is_connected():
            msg = f"The {kind} construction produced a disconnected graph."
            raise GadgetError(msg)
        return GadgetOutput(graph, dict(self._roles), kind, dict(meta or {}), source)
