"""Simple undirected graphs: representation, powers, exact clique number,
structural predicates, and the binary constructions (union, join, Cartesian
product, corona, complement).

Vertices are always ``0 .. n-1``.  Graphs are immutable after construction;
every operation returns a new value, so concurrent readers need no locking.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

from .errors import DomainError

Edge = tuple[int, int]

# Provenance values: ("orig", v), ("left", v), ("right", v), ("pair", u, v),
# ("center", v), ("copy", i, v).  In-memory only, never serialized.
Provenance = tuple


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=True)
class Graph:
    """Simple undirected graph on vertices ``0 .. n-1``.

    ``roles`` optionally tags vertices with structural names such as "hub" or
    "pendant"; ``provenance`` records, for constructed graphs, which input
    vertex each output vertex came from.  Neither participates in equality.
    """

    n: int
    edges: frozenset[Edge] = frozenset()
    roles: Mapping[int, str] = field(default_factory=dict, compare=False)
    provenance: Mapping[int, Provenance] = field(
        default_factory=dict, compare=False, repr=False
    )

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError(f"vertex count must be non-negative, got {self.n}")
        if not isinstance(self.edges, frozenset):
            object.__setattr__(
                self, "edges", frozenset(_normalize_edge(u, v) for u, v in self.edges)
            )
        for u, v in self.edges:
            if u == v:
                raise DomainError(f"self-loop at vertex {u} is not allowed")
            if u > v:
                raise DomainError(f"edge {(u, v)} must be stored with u < v")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DomainError(f"edge {(u, v)} out of range for n={self.n}")
        for v in self.roles:
            if not (0 <= v < self.n):
                raise DomainError(f"role annotation for unknown vertex {v}")

    @classmethod
    def make(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        roles: Mapping[int, str] | None = None,
        provenance: Mapping[int, Provenance] | None = None,
    ) -> Graph:
        """Build a graph, normalizing edge endpoint order."""
        normalized = frozenset(_normalize_edge(u, v) for u, v in edges)
        return cls(n, normalized, dict(roles or {}), dict(provenance or {}))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def vertices(self) -> range:
        return range(self.n)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.sorted_edges],
            "roles": {str(v): tag for v, tag in sorted(self.roles.items())},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Graph:
        try:
            n = int(data["n"])
            edges = [(int(u), int(v)) for u, v in data.get("edges", [])]
            roles = {int(v): str(tag) for v, tag in data.get("roles", {}).items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed graph object: {exc}") from exc
        return cls.make(n, edges, roles)


def distances_from(g: Graph, source: int) -> list[int]:
    """BFS distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return distances_from(g, 0).count(-1) == 0


def components(g: Graph) -> list[Graph]:
    """Connected components as graphs; each carries ("orig", v) provenance."""
    seen = [False] * g.n
    out: list[Graph] = []
    for start in g.vertices:
        if seen[start]:
            continue
        dist = distances_from(g, start)
        members = sorted(v for v in g.vertices if dist[v] >= 0)
        for v in members:
            seen[v] = True
        out.append(induced_subgraph(g, members))
    return out


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    members = sorted(set(vertices))
    for v in members:
        if not (0 <= v < g.n):
            raise DomainError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(members)}
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    roles = {index[v]: g.roles[v] for v in members if v in g.roles}
    prov = {index[v]: ("orig", v) for v in members}
    return Graph.make(len(members), edges, roles, prov)


def diameter(g: Graph) -> int:
    """Greatest pairwise distance.  Requires a connected graph."""
    if g.n == 0:
        raise DomainError("diameter of the empty graph is undefined")
    best = 0
    for v in g.vertices:
        dist = distances_from(g, v)
        if -1 in dist:
            raise DomainError("diameter requires a connected graph")
        best = max(best, max(dist))
    return best


def power(g: Graph, r: int) -> Graph:
    """Graph with the same vertices, joining u and v iff their distance in
    ``g`` is between 1 and ``r``.  Disconnected inputs are handled per
    component (cross-component distances are infinite)."""
    if r < 1:
        raise DomainError(f"graph power requires r >= 1, got {r}")
    edges: list[Edge] = []
    for v in g.vertices:
        dist = distances_from(g, v)
        edges.extend((v, w) for w in range(v + 1, g.n) if 0 < dist[w] <= r)
    return Graph.make(g.n, edges, g.roles)


def is_complete(g: Graph) -> bool:
    return len(g.edges) == g.n * (g.n - 1) // 2


def is_bipartite(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two-coloring of ``g`` if one exists, else None.

    BFS per component; each component's smallest vertex is placed on the
    left side, which makes the returned partition deterministic.
    """
    color = [-1] * g.n
    for start in g.vertices:
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    left = tuple(v for v in g.vertices if color[v] == 0)
    right = tuple(v for v in g.vertices if color[v] == 1)
    return left, right


def maximum_clique(g: Graph) -> tuple[int, ...]:
    """A maximum clique, found by exhaustive branch and bound.

    Bron-Kerbosch with pivoting plus the |R| + |P| bound; candidates are
    visited in ascending vertex order and the pivot tie-breaks on the
    smallest id, so the result is deterministic.
    """
    if g.n == 0:
        return ()
    adj = [set(s) for s in g.adjacency]
    best: list[int] = []

    def expand(clique: list[int], cands: set[int], excluded: set[int]) -> None:
        nonlocal best
        if not cands and not excluded:
            if len(clique) > len(best):
                best = list(clique)
            return
        if len(clique) + len(cands) <= len(best):
            return
        pivot = min(
            cands | excluded, key=lambda u: (-len(adj[u] & cands), u)
        )
        for v in sorted(cands - adj[pivot]):
            clique.append(v)
            expand(clique, cands & adj[v], excluded & adj[v])
            clique.pop()
            cands.remove(v)
            excluded.add(v)

    expand([], set(g.vertices), set())
    return tuple(sorted(best))


def clique_number(g: Graph) -> int:
    """Exact maximum clique cardinality."""
    if g.n == 0:
        raise DomainError("clique number requires at least one vertex")
    return len(maximum_clique(g))


def complement(g: Graph) -> Graph:
    edges = [
        (u, v) for u, v in combinations(g.vertices, 2) if not g.has_edge(u, v)
    ]
    return Graph.make(g.n, edges, g.roles)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """g1's vertices keep their ids; g2's are shifted up by g1.n."""
    shift = g1.n
    edges = list(g1.edges) + [(u + shift, v + shift) for u, v in g2.edges]
    roles = dict(g1.roles)
    roles.update({v + shift: tag for v, tag in g2.roles.items()})
    prov: dict[int, Provenance] = {v: ("left", v) for v in g1.vertices}
    prov.update({v + shift: ("right", v) for v in g2.vertices})
    return Graph.make(g1.n + g2.n, edges, roles, prov)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every cross edge."""
    base = disjoint_union(g1, g2)
    cross = [(u, v + g1.n) for u in g1.vertices for v in g2.vertices]
    return Graph.make(
        base.n, list(base.edges) + cross, base.roles, base.provenance
    )


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Vertex (u, v) is encoded as u * g2.n + v."""
    def enc(u: int, v: int) -> int:
        return u * g2.n + v

    edges: list[Edge] = []
    for u in g1.vertices:
        edges.extend((enc(u, a), enc(u, b)) for a, b in g2.edges)
    for a in g2.vertices:
        edges.extend((enc(u, a), enc(v, a)) for u, v in g1.edges)
    prov = {enc(u, v): ("pair", u, v) for u in g1.vertices for v in g2.vertices}
    return Graph.make(g1.n * g2.n, edges, None, prov)


def corona(g1: Graph, g2: Graph) -> Graph:
    """One fresh copy of g2 per vertex of g1, that vertex joined to its whole
    copy.  Copy i of g2 occupies ids ``g1.n + i*g2.n .. g1.n + (i+1)*g2.n - 1``."""
    if g2.n == 0:
        raise DomainError("corona requires a non-empty second graph")
    edges = list(g1.edges)
    prov: dict[int, Provenance] = {v: ("center", v) for v in g1.vertices}
    for i in g1.vertices:
        base = g1.n + i * g2.n
        edges.extend((base + u, base + v) for u, v in g2.edges)
        edges.extend((i, base + v) for v in g2.vertices)
        for v in g2.vertices:
            prov[base + v] = ("copy", i, v)
    return Graph.make(g1.n + g1.n * g2.n, edges, None, prov)
