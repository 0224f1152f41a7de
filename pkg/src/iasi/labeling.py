"""Vertex labelings by integer sets, the property verifier, and induced
labelings on transformed graphs.

``verify`` inspects a labeling for the full property ladder:

* set-labeling: the vertex labels are pairwise distinct non-empty sets;
* set-indexer: the induced edge labels (sumsets of endpoint labels) are
  also pairwise distinct;
* strong: every edge label's cardinality is the product of its endpoint
  cardinalities, equivalently adjacent difference sets are disjoint;
* uniform / completely uniform: all edge (and vertex) cardinalities agree.

Strongness is always evaluated by BOTH criteria and cross-checked, so the
cardinality/difference-set equivalence is exercised on every call.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import DomainError
from .graphs import Edge, Graph
from .sumsets import IntSet, difference_set, is_strong_pair, sumset
from .transforms import contract, line_graph, reduce_path, subdivide, total_graph


@dataclass(frozen=True)
class Labeling:
    """Total mapping vertex -> non-empty IntSet for some graph."""

    vertex_labels: Mapping[int, IntSet] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertex_labels", dict(self.vertex_labels))

    def label(self, v: int) -> IntSet:
        try:
            return self.vertex_labels[v]
        except KeyError:
            raise DomainError(f"labeling does not cover vertex {v}") from None

    def relabel(self, vertex_map: Mapping[int, int]) -> Labeling:
        """Labeling for a derived graph: new vertex v gets the label of the
        original vertex ``vertex_map[v]``."""
        return Labeling({v: self.label(old) for v, old in vertex_map.items()})

    def to_json(self) -> dict:
        return {
            "vertex_labels": {
                str(v): s.to_json() for v, s in sorted(self.vertex_labels.items())
            }
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Labeling:
        try:
            labels = {
                int(v): IntSet.from_json(xs)
                for v, xs in data["vertex_labels"].items()
            }
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise DomainError(f"malformed labeling object: {exc}") from exc
        return cls(labels)


FailingEdge = tuple[Edge, int, int, int]


@dataclass(frozen=True)
class PropertyReport:
    """Verification verdict for (graph, labeling)."""

    is_set_labeling: bool
    is_set_indexer: bool
    is_strong: bool
    strong_vacuous: bool
    failing_edges: tuple[FailingEdge, ...]
    uniform_k: int | None
    completely_uniform: tuple[int, int] | None
    vertex_set_indexing_numbers: dict[int, int]

    def to_json(self) -> dict:
        return {
            "is_set_labeling": self.is_set_labeling,
            "is_set_indexer": self.is_set_indexer,
            "is_strong": self.is_strong,
            "strong_vacuous": self.strong_vacuous,
            "failing_edges": [
                [list(edge), cu, cv, ce] for edge, cu, cv, ce in self.failing_edges
            ],
            "uniform_k": self.uniform_k,
            "completely_uniform": (
                list(self.completely_uniform) if self.completely_uniform else None
            ),
            "vertex_set_indexing_numbers": {
                str(v): c
                for v, c in sorted(self.vertex_set_indexing_numbers.items())
            },
        }


def _check_total(g: Graph, f: Labeling) -> None:
    for v in g.vertices:
        if v not in f.vertex_labels:
            raise DomainError(f"labeling is partial: vertex {v} has no label")
        if not f.vertex_labels[v]:
            raise DomainError(f"vertex {v} is labeled with the empty set")
    for v in f.vertex_labels:
        if not (0 <= v < g.n):
            raise DomainError(f"labeling mentions unknown vertex {v}")


def edge_label(g: Graph, f: Labeling, u: int, v: int) -> IntSet:
    """Sumset of the endpoint labels.  ``uv`` must be an edge of ``g``."""
    if not g.has_edge(u, v):
        raise DomainError(f"({u}, {v}) is not an edge of the graph")
    return sumset(f.label(u), f.label(v))


def verify(g: Graph, f: Labeling, *, cross_check: bool = True) -> PropertyReport:
    """Compute the full property report for ``f`` on ``g``.

    The labeling must be total with non-empty labels; anything else is a
    ``DomainError``.  An edgeless graph is vacuously strong and the report
    says so via ``strong_vacuous``.
    """
    _check_total(g, f)
    vertex_cards = {v: len(f.label(v)) for v in g.vertices}
    is_set_labeling = len({f.label(v) for v in g.vertices}) == g.n

    edge_labels: dict[Edge, IntSet] = {
        e: sumset(f.label(e[0]), f.label(e[1])) for e in g.sorted_edges
    }
    is_set_indexer = len(set(edge_labels.values())) == len(edge_labels)

    failing: list[FailingEdge] = []
    for (u, v), lab in edge_labels.items():
        if not is_strong_pair(f.label(u), f.label(v), cross_check=cross_check):
            failing.append(((u, v), vertex_cards[u], vertex_cards[v], len(lab)))

    edge_cards = [len(lab) for lab in edge_labels.values()]
    uniform_k = edge_cards[0] if edge_cards and len(set(edge_cards)) == 1 else None
    completely_uniform = None
    if uniform_k is not None and len(set(vertex_cards.values())) == 1:
        completely_uniform = (uniform_k, next(iter(vertex_cards.values())))

    return PropertyReport(
        is_set_labeling=is_set_labeling,
        is_set_indexer=is_set_indexer,
        is_strong=not failing,
        strong_vacuous=not edge_labels,
        failing_edges=tuple(failing),
        uniform_k=uniform_k,
        completely_uniform=completely_uniform,
        vertex_set_indexing_numbers=vertex_cards,
    )


def _require_strong(g: Graph, f: Labeling, operation: str) -> None:
    if not verify(g, f).is_strong:
        raise DomainError(f"{operation} requires a strong labeling as input")


def induce_on_line_graph(g: Graph, f: Labeling) -> tuple[Graph, Labeling]:
    """Label each line-graph vertex with the label of the edge it came from."""
    _require_strong(g, f, "line-graph induction")
    lg, origin = line_graph(g)
    labels = {v: edge_label(g, f, *e) for v, e in origin.items()}
    return lg, Labeling(labels)


def induce_on_total_graph(g: Graph, f: Labeling) -> tuple[Graph, Labeling]:
    """Original vertices keep their labels; edge-vertices take the edge label."""
    _require_strong(g, f, "total-graph induction")
    tg, origin = total_graph(g)
    labels: dict[int, IntSet] = {}
    for v, what in origin.items():
        if what[0] == "vertex":
            labels[v] = f.label(what[1])
        else:
            labels[v] = edge_label(g, f, *what[1])
    return tg, Labeling(labels)


def induce_on_subdivision(
    g: Graph, f: Labeling, e: tuple[int, int]
) -> tuple[Graph, Labeling, int]:
    """Subdivide edge ``e``; the fresh vertex takes the removed edge's label."""
    _require_strong(g, f, "subdivision induction")
    lab = edge_label(g, f, *e)
    sg, w = subdivide(g, e)
    labels = {v: f.label(v) for v in g.vertices}
    labels[w] = lab
    return sg, Labeling(labels), w


def induce_on_contraction(
    g: Graph, f: Labeling, e: tuple[int, int]
) -> tuple[Graph, Labeling, int, dict[int, int]]:
    """Contract edge ``e``; the merged vertex takes the contracted edge's
    label, everyone else keeps theirs.

    The result can stop being a set-labeling (the edge label may collide
    with an existing vertex label); that is reported by ``verify``, not
    rejected here.
    """
    _require_strong(g, f, "contraction induction")
    lab = edge_label(g, f, *e)
    cg, merged, vertex_map = contract(g, e)
    labels: dict[int, IntSet] = {}
    for old, new in vertex_map.items():
        labels[new] = f.label(old)
    labels[merged] = lab
    return cg, Labeling(labels), merged, vertex_map


def induce_on_reduction(
    g: Graph, f: Labeling, path: tuple[int, int, int]
) -> tuple[Graph, Labeling]:
    """Reduce the path ``u - w - v`` to the edge ``uv``; surviving vertices
    keep their labels."""
    _require_strong(g, f, "reduction induction")
    rg = reduce_path(g, path)
    w = path[1]
    labels = {
        (v - 1 if v > w else v): f.label(v) for v in g.vertices if v != w
    }
    return rg, Labeling(labels)
