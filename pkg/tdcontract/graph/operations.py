"""
Graph operations: edge contraction, edge subdivision, set distances.
All operations return new graphs.
"""
import typing

from ..errors import InvalidEdgeError
from .graph import Edge, Graph, iter_bits, to_mask


class Contraction(typing.NamedTuple):
    """
    Result of an edge contraction. `relabel[w]` is the id of old vertex `w`
    in the contracted graph (both endpoints map to the merged vertex).
    """

    graph: Graph
    relabel: typing.Tuple[int, ...]


def _require_edge(g: Graph, e: Edge) -> None:
    if not g.has_edge(e.u, e.v):
        msg = f"{e} is not an edge of the graph."
        raise InvalidEdgeError(msg)


def _squeeze(mask: int, position: int) -> int:
    # removes bit `position` and shifts the higher bits down
    low = mask & ((1 << position) - 1)
    high = mask >> (position + 1) << position
    return low | high


def contract_edge(g: Graph, e: Edge) -> Contraction:
    """
    Contracts the edge e=uv. The merged vertex takes the id min(u,v) and all
    ids above max(u,v) shift down by one.
    :param g: The graph.
    :param e: An edge of g.
    :return: The contracted graph and the relabel map.
    """
    _require_edge(g, e)
    keep, drop = e.u, e.v
    merged = (g.neighbor_mask(keep) | g.neighbor_mask(drop)) & ~(1 << keep | 1 << drop)
    rows = []
    for w in g.vertices():
        if w == drop:
            continue
        if w == keep:
            row = merged
        else:
            row = g.neighbor_mask(w)
            if row >> drop & 1:
                row = (row & ~(1 << drop)) | (1 << keep)
        rows.append(_squeeze(row, drop))
    relabel = tuple(keep if w == drop else (w - 1 if w > drop else w) for w in g.vertices())
    return Contraction(Graph.from_rows(rows), relabel)


def k_subdivide(g: Graph, e: Edge, k: int) -> Graph:
    """
    Replaces the edge uw by a path u-v1-...-vk-w. The new vertices get the
    ids n..n+k-1 in path order; old ids stay unchanged.
    """
    _require_edge(g, e)
    if k < 1:
        msg = f"The subdivision length has to be positive, got {k}."
        raise ValueError(msg)
    n = g.n
    edges = [(a.u, a.v) for a in g.edges() if a != e]
    path = [e.u, *range(n, n + k), e.v]
    edges.extend(zip(path, path[1:]))
    return Graph(n + k, edges)


def distance(
    g: Graph, s: typing.Iterable[int], t: typing.Iterable[int]
) -> typing.Optional[int]:
    """
    Length of a shortest path between the vertex sets s and t, computed by a
    multi-source breadth-first search.
    :return: The distance, or None if t is unreachable from s.
    """
    source, target = to_mask(s), to_mask(t)
    if not source or not target:
        msg = "Distance is only defined for nonempty vertex sets."
        raise ValueError(msg)
    seen = frontier = source
    steps = 0
    while frontier:
        if frontier & target:
            return steps
        frontier = g.neighborhood_mask(frontier) & ~seen
        seen |= frontier
        steps += 1
    return None


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """
    The vertices of g2 are shifted behind the vertices of g1.
    """
    offset = g1.n
    return Graph.from_rows(g1.rows + tuple(row << offset for row in g2.rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """
    Disjoint union plus all edges between g1 and g2.
    """
    offset = g1.n
    first = to_mask(range(offset))
    second = to_mask(range(offset, offset + g2.n))
    rows = [row | second for row in g1.rows]
    rows.extend((row << offset) | first for row in g2.rows)
    return Graph.from_rows(rows)


def closed_neighborhood(g: Graph, vertices: typing.Iterable[int]) -> int:
    """
    :return: N[S] as mask.
    """
    mask = to_mask(vertices)
    return mask | g.neighborhood_mask(mask)


def is_clique(g: Graph, vertices: typing.Iterable[int]) -> bool:
    mask = to_mask(vertices)
    return all(
        (g.closed_neighbor_mask(v) & mask) == mask for v in iter_bits(mask)
    )


def girth(g: Graph) -> typing.Optional[int]:
    """
    Length of a shortest cycle, found by a breadth-first search from every
    vertex.
    :return: The girth, or None if g is a forest.
    """
    best: typing.Optional[int] = None
    for root in g.vertices():
        depth = {root: 0}
        parent = {root: -1}
        queue = [root]
        for u in queue:
            if best is not None and 2 * depth[u] + 1 >= best:
                break
            for w in g.neighbors(u):
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = depth[u] + depth[w] + 1
                    if best is None or length < best:
                        best = length
    return best
