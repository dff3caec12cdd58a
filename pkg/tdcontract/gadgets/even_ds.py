"""
Instance for P6-free and (P5+P2)-free graphs built from a graph G and an
even bound 2l on its domination number (under the promise gamma(G) >= 4).

The result consists of the vertices x_1..x_2l and 2l+1 copies V0..V2l of
V(G). V0 is a clique, every other copy is independent, a vertex v_j of copy
i >= 1 is adjacent to the V0-copies of N_G[v_j], x_i is complete to
V0 ∪ Vi, and x_i ~ x_{i+1} for odd i. Its total domination number is
min(gamma(G), 2l) and it is a yes-instance iff gamma(G) <= 2l.
"""
import typing

from ..errors import GadgetError, PromiseError
from ..graph.graph import Graph, iter_bits
from ..oracle.domination import gamma
from .gadget import GadgetBuilder, GadgetOutput

PROMISE_CHECK_LIMIT = 20


def copy_role(i: int, v: int) -> str:
    return f"V{i}[v{v}]"


def build_even_ds_gadget(
    g: Graph, ell: int, trust_promise: bool = False
) -> GadgetOutput:
    """
    :param g: A connected graph with gamma(g) >= 4.
    :param ell: Half of the domination bound, at least 1.
    :param trust_promise: Skip the check of gamma(g) >= 4. Required for
     graphs with more than PROMISE_CHECK_LIMIT vertices.
    :return: The instance with roles "x_i" and "V{i}[v{j}]".
    """
    if ell < 1:
        msg = f"The bound 2l needs l >= 1, got l={ell}."
        raise GadgetError(msg)
    if g.n < 1 or not g.is_connected():
        msg = "The source graph has to be connected."
        raise GadgetError(msg)
    domination: typing.Optional[int] = None
    if not trust_promise:
        if g.n > PROMISE_CHECK_LIMIT:
            msg = (
                f"Cannot check gamma >= 4 for {g.n} > {PROMISE_CHECK_LIMIT} vertices;"
                " pass trust_promise to skip the check."
            )
            raise PromiseError(msg)
        domination = gamma(g)
        if domination < 4:
            msg = f"The promise gamma >= 4 does not hold (gamma = {domination})."
            raise PromiseError(msg)

    builder = GadgetBuilder()
    xs = [f"x_{i}" for i in range(1, 2 * ell + 1)]
    builder.vertices(xs)
    for i in range(2 * ell + 1):
        builder.vertices(copy_role(i, v) for v in g.vertices())
    base = [copy_role(0, v) for v in g.vertices()]
    builder.clique(base)
    for i in range(1, 2 * ell + 1):
        for v in g.vertices():
            for u in iter_bits(g.closed_neighbor_mask(v)):
                builder.edge(copy_role(i, v), copy_role(0, u))
        builder.complete_to(xs[i - 1], base)
        builder.complete_to(xs[i - 1], (copy_role(i, v) for v in g.vertices()))
    for i in range(0, 2 * ell, 2):
        builder.edge(xs[i], xs[i + 1])

    meta: typing.Dict[str, typing.Any] = {"ell": ell, "expected_n": 2 * ell + (2 * ell + 1) * g.n}
    if domination is not None:
        meta["gamma"] = domination
        meta["expected_gamma_t"] = min(domination, 2 * ell)
        meta["expected_decision"] = domination <= 2 * ell
    return builder.build("even-ds", meta, source=g)
