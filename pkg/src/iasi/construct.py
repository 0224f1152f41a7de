"""Constructive labelers and the bounded exhaustive-search oracle.

All constructors share one offset scheme: vertex ``i`` receives its base set
translated by ``B ** i``, where ``B`` is the smallest power of two exceeding
twice the largest element appearing in any base set (and at least 2).  The
distinct powers force vertex labels apart, and because every edge label's
minimum is ``B**i + B**j`` (a unique unordered pair of powers), edge labels
are pairwise distinct as well.  The scheme is fully deterministic, so
constructor output is reproducible byte for byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceededError, DomainError, OffsetOverflowError
from .graphs import Graph, components, is_bipartite
from .labeling import Labeling, verify
from .sumsets import IntSet, difference_set, sumset, translate

# Elements above this would break consumers that parse labels into 64-bit
# integers, so constructors refuse rather than emit them.
MAX_LABEL_ELEMENT = 2**63 - 1

DEFAULT_SEARCH_BUDGET = 10**7


@dataclass(frozen=True)
class SearchBounds:
    """Finite search space: labels are subsets of ``{0..max_element}`` with
    at most ``max_cardinality`` elements."""

    max_element: int
    max_cardinality: int

    def __post_init__(self) -> None:
        if self.max_element < 0:
            raise DomainError(f"max_element must be >= 0, got {self.max_element}")
        if self.max_cardinality < 1:
            raise DomainError(
                f"max_cardinality must be >= 1, got {self.max_cardinality}"
            )
        if self.max_cardinality > self.max_element + 1:
            raise DomainError(
                f"max_cardinality {self.max_cardinality} exceeds the "
                f"{self.max_element + 1} available elements"
            )

    def to_json(self) -> dict:
        return {
            "max_element": self.max_element,
            "max_cardinality": self.max_cardinality,
        }


def offset_base(max_intra_element: int) -> int:
    """Smallest power of two exceeding twice the largest intra-set element,
    but never less than 2 (offsets must still be distinct for singletons)."""
    base = 2
    while base <= 2 * max_intra_element:
        base *= 2
    return base


def _offsets(base: int, count: int, max_intra_element: int) -> list[int]:
    top = base ** (count - 1) if count else 0
    if top + max_intra_element > MAX_LABEL_ELEMENT:
        raise OffsetOverflowError(
            f"offset schedule reaches {top + max_intra_element}, beyond the "
            f"{MAX_LABEL_ELEMENT} element cap; use a smaller graph or raise the cap"
        )
    return [base**i for i in range(count)]


def construct_strong(g: Graph) -> Labeling:
    """A strong set-indexer that every graph admits.

    Vertex ``i`` gets ``{0, i + 1}`` shifted by its offset: the difference
    sets are the singletons ``{i + 1}``, pairwise disjoint, so every edge
    (indeed every vertex pair) is strong.
    """
    base = offset_base(g.n)
    offsets = _offsets(base, g.n, g.n)
    labels = {
        v: translate(IntSet.of(0, v + 1), offsets[v]) for v in g.vertices
    }
    return Labeling(labels)


def construct_strongly_k_uniform_bipartite(
    g: Graph, k: int, divisors: tuple[int, int]
) -> Labeling:
    """Strongly k-uniform labeling of a bipartite graph.

    With ``(a, b)`` a divisor pair of ``k``, left vertices get translates of
    ``{0, 1, .., a-1}`` and right vertices translates of
    ``{0, a, .., (b-1)a}``.  Left difference sets live below ``a``, right
    ones are positive multiples of ``a``, so every edge is strong with
    sumset cardinality exactly ``a * b = k``.
    """
    a, b = divisors
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if a < 1 or b < 1 or a * b != k:
        raise DomainError(f"divisors {divisors} do not multiply to k={k}")
    parts = is_bipartite(g)
    if parts is None:
        raise DomainError("strongly k-uniform labeling by divisor pair requires a bipartite graph")
    left, right = parts
    left_base = IntSet.from_iterable(range(a))
    right_base = IntSet.from_iterable(a * i for i in range(b))
    max_intra = max(max(left_base.elements), max(right_base.elements))
    offsets = _offsets(offset_base(max_intra), g.n, max_intra)
    labels: dict[int, IntSet] = {}
    for v in left:
        labels[v] = translate(left_base, offsets[v])
    for v in right:
        labels[v] = translate(right_base, offsets[v])
    return Labeling(labels)


def _disjoint_progression_labeling(n: int, l: int) -> Labeling:
    """Every one of ``n`` vertices gets an l-term arithmetic progression;
    the common differences are distinct powers, making ALL difference sets
    pairwise disjoint, so any graph on these vertices is strong and every
    edge label has cardinality l**2."""
    if n < 1:
        raise DomainError(f"need n >= 1 vertices, got {n}")
    if l < 1:
        raise DomainError(f"need cardinality l >= 1, got {l}")
    step_base = 2
    while step_base <= l:
        step_base *= 2
    steps = [step_base**i for i in range(n)]
    max_intra = (l - 1) * steps[-1]
    offsets = _offsets(offset_base(max_intra), n, max_intra)
    labels = {
        v: translate(IntSet.from_iterable(steps[v] * j for j in range(l)), offsets[v])
        for v in range(n)
    }
    return Labeling(labels)


def construct_completely_uniform_complete(n: int, l: int) -> Labeling:
    """(l**2, l)-completely uniform strong labeling of the complete graph
    on ``n`` vertices."""
    return _disjoint_progression_labeling(n, l)


def _candidate_labels(bounds: SearchBounds) -> list[IntSet]:
    """All admissible labels in lexicographic (cardinality, elements) order."""
    out: list[IntSet] = []
    universe = range(bounds.max_element + 1)
    for card in range(1, bounds.max_cardinality + 1):
        out.extend(IntSet(combo) for combo in combinations(universe, card))
    return out


def _edge_ok(a: IntSet, b: IntSet, predicate: str, k: int | None) -> bool:
    if difference_set(a).intersects(difference_set(b)):
        return False
    if predicate == "strongly-uniform" and len(a) * len(b) != k:
        return False
    return True


def bounded_search(
    g: Graph,
    bounds: SearchBounds,
    *,
    predicate: str = "strong",
    k: int | None = None,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> Labeling | None:
    """Exhaustive backtracking search for a labeling with full set-indexer
    injectivity satisfying the predicate ("strong", or "strongly-uniform"
    with edge cardinality ``k``).

    Returns the lexicographically first witness, or None, which means NO
    labeling within the bounds satisfies the predicate (shrinking the bounds
    can only keep it absent).  Refuses up front when the raw space
    ``(#labels) ** n`` exceeds the budget.
    """
    if predicate not in ("strong", "strongly-uniform"):
        raise DomainError(f"unknown search predicate {predicate!r}")
    if predicate == "strongly-uniform":
        if k is None or k < 1:
            raise DomainError("strongly-uniform search needs a positive k")
    candidates = _candidate_labels(bounds)
    space = len(candidates) ** g.n
    if space > budget:
        raise BudgetExceededError(
            f"search space has {space} candidate labelings, beyond the budget "
            f"of {budget}"
        )

    adjacency = g.adjacency
    assignment: list[IntSet | None] = [None] * g.n
    used_vertex_labels: set[IntSet] = set()
    used_edge_labels: dict[IntSet, int] = {}

    def extend(v: int) -> Labeling | None:
        if v == g.n:
            return Labeling({u: lab for u, lab in enumerate(assignment)})  # type: ignore[misc]
        for lab in candidates:
            if lab in used_vertex_labels:
                continue
            earlier = [u for u in adjacency[v] if u < v]
            if any(not _edge_ok(assignment[u], lab, predicate, k) for u in earlier):
                continue
            new_edge_labels = [sumset(assignment[u], lab) for u in earlier]
            seen_here: set[IntSet] = set()
            collision = False
            for el in new_edge_labels:
                if el in used_edge_labels or el in seen_here:
                    collision = True
                    break
                seen_here.add(el)
            if collision or len(seen_here) != len(new_edge_labels):
                continue
            assignment[v] = lab
            used_vertex_labels.add(lab)
            for el in new_edge_labels:
                used_edge_labels[el] = used_edge_labels.get(el, 0) + 1
            found = extend(v + 1)
            if found is not None:
                return found
            assignment[v] = None
            used_vertex_labels.discard(lab)
            for el in new_edge_labels:
                used_edge_labels[el] -= 1
                if not used_edge_labels[el]:
                    del used_edge_labels[el]
        return None

    return extend(0)


@dataclass(frozen=True)
class ComponentCensus:
    """Component counts next to the divisor-count bounds those counts are
    compared against.  The bounds are reported, not enforced: see
    ``Decision.admits`` for what actually decides admissibility."""

    components: int
    bipartite_components: int
    non_bipartite_components: int
    divisor_count: int
    k_is_square: bool
    max_bipartite_components: int
    max_components: int | None
    within_bounds: bool

    def to_json(self) -> dict:
        return {
            "components": self.components,
            "bipartite_components": self.bipartite_components,
            "non_bipartite_components": self.non_bipartite_components,
            "divisor_count": self.divisor_count,
            "k_is_square": self.k_is_square,
            "max_bipartite_components": self.max_bipartite_components,
            "max_components": self.max_components,
            "within_bounds": self.within_bounds,
        }


@dataclass(frozen=True)
class Decision:
    """Outcome of the strongly-k-uniform admissibility decision."""

    k: int
    admits: bool
    reason: str
    witness: Labeling | None
    census: ComponentCensus

    def to_json(self) -> dict:
        return {
            "admits": self.admits,
            "reason": self.reason,
            "witness": self.witness.to_json() if self.witness else None,
            "bounds": self.census.to_json(),
        }


def _divisor_count(k: int) -> int:
    return sum(1 for d in range(1, k + 1) if k % d == 0)


def balanced_divisors(k: int) -> tuple[int, int]:
    """The most balanced divisor pair (a, b) with a <= b and a * b = k."""
    a = max(d for d in range(1, math.isqrt(k) + 1) if k % d == 0)
    return a, k // a


def decide_strongly_k_uniform(g: Graph, k: int) -> Decision:
    """Decide whether ``g`` admits a strongly k-uniform set-indexer and, if
    so, construct one.

    Non-square k needs every component bipartite; square k always works
    (non-bipartite parts force all cardinalities to sqrt(k), which the
    progression labeler realizes on any graph).  The census reports the
    divisor-count component bounds for inspection; they do not veto a
    decision that the constructors can witness.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    parts = [is_bipartite(c) is not None for c in components(g)]
    n_bip = sum(parts)
    n_non = len(parts) - n_bip
    n_div = _divisor_count(k)
    root = math.isqrt(k)
    square = root * root == k
    if square:
        max_bip = (n_div - 1) // 2
        max_total: int | None = (n_div + 1) // 2
        within = n_bip <= max_bip and len(parts) <= max_total
    else:
        max_bip = n_div // 2
        max_total = None
        within = n_bip <= max_bip
    census = ComponentCensus(
        components=len(parts),
        bipartite_components=n_bip,
        non_bipartite_components=n_non,
        divisor_count=n_div,
        k_is_square=square,
        max_bipartite_components=max_bip,
        max_components=max_total,
        within_bounds=within,
    )

    if n_non and not square:
        return Decision(
            k=k,
            admits=False,
            reason=(
                f"k={k} is not a perfect square and the graph has "
                f"{n_non} non-bipartite component(s); only bipartite graphs "
                "(or unions of bipartite components) admit a strongly "
                "k-uniform set-indexer for non-square k"
            ),
            witness=None,
            census=census,
        )

    if n_non:
        witness = _disjoint_progression_labeling(g.n, root)
        reason = (
            f"k={k} is the perfect square of l={root}; every vertex gets an "
            f"l-term progression with pairwise disjoint difference sets, a "
            f"({k},{root})-completely uniform labeling"
        )
    else:
        a, b = balanced_divisors(k)
        witness = construct_strongly_k_uniform_bipartite(g, k, (a, b))
        reason = (
            f"every component is bipartite; sides take translated blocks of "
            f"sizes {a} and {b} with {a}*{b}={k}"
        )
    report = verify(g, witness)
    if not (report.is_strong and report.is_set_indexer and report.is_set_labeling):
        raise DomainError(
            "constructed witness failed verification; this is a bug"
        )
    if g.edges and report.uniform_k != k:
        raise DomainError(
            f"constructed witness has uniform cardinality {report.uniform_k}, "
            f"expected {k}; this is a bug"
        )
    return Decision(k=k, admits=True, reason=reason, witness=witness, census=census)
