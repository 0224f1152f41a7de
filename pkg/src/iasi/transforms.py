"""Structural graph transformations: line graph, total graph, subdivision,
edge contraction, and elementary topological reduction.

Each operation returns the transformed graph together with enough origin
information to carry a vertex labeling across the transformation.
"""

from __future__ import annotations

from .errors import DomainError
from .graphs import Edge, Graph, _normalize_edge


def _require_edge(g: Graph, e: tuple[int, int]) -> Edge:
    edge = _normalize_edge(*e)
    if edge not in g.edges:
        raise DomainError(f"edge {e} is not present in the graph")
    return edge


def line_graph(g: Graph) -> tuple[Graph, dict[int, Edge]]:
    """Graph whose vertices are the edges of ``g``, adjacent when the
    original edges share an endpoint.  Returns the graph and the origin map
    (new vertex -> original edge)."""
    if not g.edges:
        raise DomainError("line graph requires at least one edge")
    edges_of_g = g.sorted_edges
    origin = dict(enumerate(edges_of_g))
    new_edges = [
        (i, j)
        for i in range(len(edges_of_g))
        for j in range(i + 1, len(edges_of_g))
        if set(edges_of_g[i]) & set(edges_of_g[j])
    ]
    return Graph.make(len(edges_of_g), new_edges), origin


def total_graph(g: Graph) -> tuple[Graph, dict[int, tuple]]:
    """Graph with one vertex per element (vertex or edge) of ``g``; vertices
    are adjacent when the corresponding elements are adjacent or incident.

    Original vertices keep their ids; edge-vertices follow in sorted edge
    order.  The origin map sends each new vertex to ``("vertex", v)`` or
    ``("edge", (u, v))``.  The line graph appears as the induced subgraph on
    the edge-vertices.
    """
    if not g.edges:
        raise DomainError("total graph requires at least one edge")
    edges_of_g = g.sorted_edges
    origin: dict[int, tuple] = {v: ("vertex", v) for v in g.vertices}
    origin.update(
        {g.n + i: ("edge", e) for i, e in enumerate(edges_of_g)}
    )
    new_edges: list[tuple[int, int]] = list(g.edges)
    for i, (u, v) in enumerate(edges_of_g):
        new_edges += [(u, g.n + i), (v, g.n + i)]
        for j in range(i + 1, len(edges_of_g)):
            if set(edges_of_g[i]) & set(edges_of_g[j]):
                new_edges.append((g.n + i, g.n + j))
    return Graph.make(g.n + len(edges_of_g), new_edges), origin


def subdivide(g: Graph, e: tuple[int, int]) -> tuple[Graph, int]:
    """Replace edge ``e`` by a path of length 2 through a fresh vertex.

    The new vertex gets id ``g.n``; returns (graph, new vertex).
    """
    u, v = _require_edge(g, e)
    w = g.n
    edges = [edge for edge in g.edges if edge != (u, v)]
    edges += [(u, w), (v, w)]
    return Graph.make(g.n + 1, edges, g.roles), w


def contract(g: Graph, e: tuple[int, int]) -> tuple[Graph, int, dict[int, int]]:
    """Delete edge ``e`` and identify its endpoints.

    The merged vertex keeps the identity of ``min(u, v)``; vertices above
    ``max(u, v)`` shift down by one so ids stay contiguous.  Parallel edges
    collapse and the contracted loop is dropped.  Returns the graph, the
    merged vertex's new id, and the total old-to-new vertex map.
    """
    u, v = _require_edge(g, e)
    keep, drop = u, v

    def remap(x: int) -> int:
        if x == drop:
            x = keep
        return x - 1 if x > drop else x

    vertex_map = {x: remap(x) for x in g.vertices}
    edges = set()
    for a, b in g.edges:
        na, nb = remap(a), remap(b)
        if na != nb:
            edges.add(_normalize_edge(na, nb))
    roles = {}
    for x, tag in g.roles.items():
        if x != drop:
            roles[remap(x)] = tag
    return Graph.make(g.n - 1, edges, roles), remap(keep), vertex_map


def reduce_path(g: Graph, path: tuple[int, int, int]) -> Graph:
    """Elementary topological reduction: replace the length-2 path
    ``u - w - v`` (with ``w`` of degree 2 and neither edge in a triangle) by
    the single edge ``uv``.

    ``w`` is removed, so vertices above it shift down by one.
    """
    u, w, v = path
    for x in (u, w, v):
        if not (0 <= x < g.n):
            raise DomainError(f"vertex {x} out of range for n={g.n}")
    if len({u, w, v}) != 3:
        raise DomainError(f"path vertices must be distinct, got {path}")
    if g.adjacency[w] != frozenset({u, v}):
        raise DomainError(
            f"middle vertex {w} must have degree 2 with neighbors {{{u}, {v}}}"
        )
    if g.has_edge(u, v):
        raise DomainError(f"edge ({u}, {v}) already present; the path closes a triangle")
    for a, b in ((u, w), (w, v)):
        if g.adjacency[a] & g.adjacency[b]:
            raise DomainError(f"edge ({a}, {b}) lies in a triangle")

    def remap(x: int) -> int:
        return x - 1 if x > w else x

    edges = {
        _normalize_edge(remap(a), remap(b)) for a, b in g.edges if w not in (a, b)
    }
    edges.add(_normalize_edge(remap(u), remap(v)))
    roles = {remap(x): tag for x, tag in g.roles.items() if x != w}
    return Graph.make(g.n - 1, edges, roles)
