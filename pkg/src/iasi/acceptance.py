"""End-to-end verification gates.

Each ``check_*`` function runs one gate over its full corpus or grid and
returns a :class:`CriterionResult`; ``run_all`` executes every gate and is
what the CLI's ``check-paper`` command wraps.  The pytest suite calls the
same runners, so there is a single source of truth for what "verified"
means.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .construct import (
    SearchBounds,
    bounded_search,
    construct_strong,
    construct_strongly_k_uniform_bipartite,
)
from .errors import DomainError
from .families import FamilySpec, generate
from .graphs import Graph, clique_number, induced_subgraph
from .labeling import (
    Labeling,
    induce_on_line_graph,
    induce_on_subdivision,
    induce_on_total_graph,
    verify,
)
from .nourish import (
    IdentityReport,
    NourishReport,
    compare,
    complement_identity_report,
    operation_identities,
)
from .sumsets import IntSet, difference_set, sumset

# Connected graphs on 1..7 vertices up to isomorphism, per vertex count.
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


@dataclass
class CriterionResult:
    name: str
    passed: bool
    detail: str
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "failures": self.failures,
        }

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: {self.detail}"


def connected_corpus(max_vertices: int = 7) -> list[Graph]:
    """Every connected graph on 1..max_vertices vertices, one per
    isomorphism class, taken from the published graph atlas."""
    import networkx as nx

    out: list[Graph] = []
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if not 1 <= n <= max_vertices:
            continue
        if not nx.is_connected(G):
            continue
        index = {node: i for i, node in enumerate(sorted(G.nodes()))}
        out.append(Graph.make(n, [(index[u], index[v]) for u, v in G.edges()]))
    return out


def _subsets_up_to(max_element: int, max_card: int) -> list[IntSet]:
    universe = range(max_element + 1)
    return [
        IntSet(c)
        for card in range(1, max_card + 1)
        for c in combinations(universe, card)
    ]


def check_sumset_equivalence() -> CriterionResult:
    """Exhaustively confirm |A+B| = |A||B| iff the difference sets of A and
    B are disjoint, over all pairs of non-empty subsets of {0..7} with at
    most 4 elements."""
    subsets = _subsets_up_to(7, 4)
    failures: list[str] = []
    pairs = 0
    for a in subsets:
        da = set(difference_set(a).elements)
        for b in subsets:
            pairs += 1
            maximal = len(sumset(a, b)) == len(a) * len(b)
            disjoint = da.isdisjoint(difference_set(b).elements)
            if maximal != disjoint:
                failures.append(f"{a.elements} vs {b.elements}")
    return CriterionResult(
        name="sumset-equivalence",
        passed=not failures,
        detail=f"{pairs} ordered pairs over {len(subsets)} subsets, "
        f"{len(failures)} disagreements",
        failures=failures[:20],
    )


def check_universal_strong_construction(
    corpus: list[Graph] | None = None,
) -> CriterionResult:
    """construct_strong must yield a strong set-indexer on every connected
    graph with at most 7 vertices."""
    corpus = connected_corpus() if corpus is None else corpus
    by_n: dict[int, int] = {}
    failures: list[str] = []
    for g in corpus:
        by_n[g.n] = by_n.get(g.n, 0) + 1
        report = verify(g, construct_strong(g))
        if not (report.is_strong and report.is_set_indexer and report.is_set_labeling):
            failures.append(f"n={g.n} edges={sorted(g.edges)}")
    census_ok = by_n == CONNECTED_COUNTS
    if not census_ok:
        failures.append(f"corpus census {by_n} != expected {CONNECTED_COUNTS}")
    return CriterionResult(
        name="universal-strong-construction",
        passed=not failures and census_ok,
        detail=f"{len(corpus)} connected graphs (<=7 vertices, "
        f"{by_n.get(7, 0)} on 7), {len(failures)} failures",
        failures=failures[:20],
    )


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return Graph.make(n, edges)


def check_subgraph_heredity(trials: int = 100, seed: int = 20240811) -> CriterionResult:
    """Restricting a strong labeling to any subgraph stays strong."""
    rng = random.Random(seed)
    failures: list[str] = []
    for t in range(trials):
        n = rng.randint(2, 9)
        g = random_graph(rng, n, rng.uniform(0.2, 0.9))
        f = construct_strong(g)
        k = rng.randint(1, n)
        keep = sorted(rng.sample(range(n), k))
        sub = induced_subgraph(g, keep)
        # drop a random subset of the induced edges: subgraphs need not be induced
        kept_edges = [e for e in sub.edges if rng.random() < 0.7]
        sub = Graph.make(sub.n, kept_edges, provenance=sub.provenance)
        restricted = f.relabel({v: keep[v] for v in sub.vertices})
        if not verify(sub, restricted).is_strong:
            failures.append(f"trial {t}: n={n} keep={keep}")
    return CriterionResult(
        name="subgraph-heredity",
        passed=not failures,
        detail=f"{trials} random (graph, labeling, subgraph) triples, "
        f"{len(failures)} failures",
        failures=failures[:20],
    )


def check_never_strong_transforms(corpus: list[Graph] | None = None) -> CriterionResult:
    """Line graphs, total graphs and single-edge subdivisions of strongly
    labeled graphs must never verify as strong (whenever the transformed
    graph has an edge to fail on)."""
    corpus = connected_corpus() if corpus is None else corpus
    failures: list[str] = []
    line_checked = total_checked = subdiv_checked = 0
    for g in corpus:
        if not g.edges:
            continue
        f = construct_strong(g)
        lg, lf = induce_on_line_graph(g, f)
        if lg.edges:
            line_checked += 1
            if verify(lg, lf).is_strong:
                failures.append(f"line graph strong: edges={sorted(g.edges)}")
        tg, tf = induce_on_total_graph(g, f)
        total_checked += 1
        if verify(tg, tf).is_strong:
            failures.append(f"total graph strong: edges={sorted(g.edges)}")
        for e in g.sorted_edges:
            sg, sf, _ = induce_on_subdivision(g, f, e)
            subdiv_checked += 1
            if verify(sg, sf).is_strong:
                failures.append(f"subdivision strong: edges={sorted(g.edges)} e={e}")
    return CriterionResult(
        name="never-strong-transforms",
        passed=not failures,
        detail=f"{line_checked} line graphs, {total_checked} total graphs, "
        f"{subdiv_checked} subdivisions; {len(failures)} verified strong",
        failures=failures[:20],
    )


def _uniformity_test_graphs() -> list[tuple[str, Graph]]:
    graphs: list[tuple[str, Graph]] = []
    for m in range(1, 8):
        graphs.append((f"path(m={m})", generate(FamilySpec.make("path", m=m))))
    for t in range(2, 8):
        graphs.append(
            (f"star(1,{t})", generate(FamilySpec.make("complete_bipartite", m=1, n=t)))
        )
    graphs.append(
        ("caterpillar", Graph.make(6, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]))
    )
    graphs.append(
        ("spider", Graph.make(8, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6), (4, 7)]))
    )
    for n in (4, 6, 8):
        graphs.append((f"cycle(n={n})", generate(FamilySpec.make("cycle", n=n))))
    for m in range(1, 5):
        for n in range(m, 9 - m):
            graphs.append(
                (
                    f"complete_bipartite(m={m},n={n})",
                    generate(FamilySpec.make("complete_bipartite", m=m, n=n)),
                )
            )
    return graphs


def check_uniform_admissibility() -> CriterionResult:
    """Divisor-pair constructions are strongly k-uniform on bipartite test
    graphs for every k in 1..12, and the bounded search separates k=2 from
    k=4 on the triangle."""
    failures: list[str] = []
    graphs = _uniformity_test_graphs()
    checked = 0
    for k in range(1, 13):
        pairs = [(a, k // a) for a in range(1, k + 1) if k % a == 0]
        for a, b in pairs:
            for name, g in graphs:
                checked += 1
                f = construct_strongly_k_uniform_bipartite(g, k, (a, b))
                report = verify(g, f)
                ok = (
                    report.is_strong
                    and report.is_set_indexer
                    and report.is_set_labeling
                    and report.uniform_k == k
                )
                if not ok:
                    failures.append(f"k={k} (a,b)=({a},{b}) on {name}")

    triangle = generate(FamilySpec.make("cycle", n=3))
    bounds2 = SearchBounds(max_element=8, max_cardinality=2)
    if bounded_search(triangle, bounds2, predicate="strongly-uniform", k=2) is not None:
        failures.append("triangle: unexpected strongly 2-uniform witness within bounds")
    bounds4 = SearchBounds(max_element=12, max_cardinality=2)
    witness = bounded_search(triangle, bounds4, predicate="strongly-uniform", k=4)
    if witness is None:
        failures.append("triangle: no strongly 4-uniform witness within bounds")
    else:
        report = verify(triangle, witness)
        if not (report.is_strong and report.uniform_k == 4 and report.is_set_indexer):
            failures.append("triangle: 4-uniform witness failed verification")
    return CriterionResult(
        name="strongly-uniform-admissibility",
        passed=not failures,
        detail=f"{checked} constructions over k=1..12 plus two bounded searches, "
        f"{len(failures)} failures",
        failures=failures[:20],
    )


def verified_grid() -> list[FamilySpec]:
    """Grid of (family, params, r) points whose published formula must match
    the oracle exactly."""
    grid: list[FamilySpec] = []
    for m in range(2, 5):
        for n in range(2, 5):
            for r in (1, 2, 3):
                grid.append(FamilySpec.make("complete_bipartite", power=r, m=m, n=n))
    for m in range(1, 9):
        for r in range(1, m + 2):
            grid.append(FamilySpec.make("path", power=r, m=m))
    for n in range(3, 11):
        for r in range(1, (n + 1) // 2 + 1):
            grid.append(FamilySpec.make("cycle", power=r, n=n))
    for n in range(4, 9):
        for r in (1, 2, 3):
            grid.append(FamilySpec.make("wheel", power=r, n=n))
    for n in range(1, 5):
        for r in (1, 2, 3):
            grid.append(FamilySpec.make("friendship", power=r, n=n))
    for m in range(1, 4):
        for n in range(2, 6):
            for r in (1, 2, 3):
                grid.append(FamilySpec.make("fan", power=r, m=m, n=n))
    return grid


def diagnostic_grid() -> list[FamilySpec]:
    """Families whose published values are under suspicion; every point is
    recorded, mismatches and all."""
    grid: list[FamilySpec] = []
    for n in range(3, 9):
        for r in range(1, 6):
            grid.append(FamilySpec.make("helm", power=r, n=n))
    for rr in range(1, 4):
        for s in range(1, 4):
            for r in (1, 2, 3):
                grid.append(FamilySpec.make("complete_split", power=r, r=rr, s=s))
    for family in ("sun", "complete_sun"):
        for n in range(3, 7):
            for r in range(1, 5):
                grid.append(FamilySpec.make(family, power=r, n=n))
    for n in range(3, 7):
        for r in range(1, 6):
            grid.append(FamilySpec.make("sunlet", power=r, n=n))
    return grid


def check_nourish_verified_grid() -> CriterionResult:
    """Formula equals oracle on every verified-grid point."""
    reports = compare(verified_grid())
    failures = [
        f"{r.spec.label()} r={r.spec.power}: formula={r.formula_value} "
        f"omega={r.omega_oracle}"
        for r in reports
        if r.match is not True
    ]
    return CriterionResult(
        name="nourish-verified-grid",
        passed=not failures,
        detail=f"{len(reports)} grid points, {len(failures)} disagreements",
        failures=failures[:40],
    )


def diagnostic_nourish_reports() -> list[NourishReport]:
    return compare(diagnostic_grid())


def check_diagnostic_ledger() -> CriterionResult:
    """The diagnostic families must produce a complete comparison ledger:
    every grid point carries an oracle value, and a match verdict whenever a
    published case applies.  Mismatches are enumerated, not failed."""
    grid = diagnostic_grid()
    reports = diagnostic_nourish_reports()
    failures: list[str] = []
    if len(reports) != len(grid):
        failures.append(f"ledger has {len(reports)} rows for {len(grid)} grid points")
    for r in reports:
        if r.omega_oracle is None:
            failures.append(f"{r.spec.label()} r={r.spec.power}: no oracle value")
        if r.formula_value is not None and r.match is None:
            failures.append(f"{r.spec.label()} r={r.spec.power}: missing verdict")
    mismatches = [
        f"{r.spec.label()} r={r.spec.power}: formula={r.formula_value} "
        f"omega={r.omega_oracle}"
        for r in reports
        if r.match is False
    ]
    return CriterionResult(
        name="nourish-diagnostic-ledger",
        passed=not failures,
        detail=f"{len(reports)} rows, {len(mismatches)} published-value mismatches "
        f"recorded, {len(failures)} ledger defects",
        failures=failures[:20] + [f"mismatch: {m}" for m in mismatches],
    )


def identity_pairs() -> list[tuple[str, Graph]]:
    return [
        ("K2", generate(FamilySpec.make("complete", n=2))),
        ("K3", generate(FamilySpec.make("complete", n=3))),
        ("C4", generate(FamilySpec.make("cycle", n=4))),
        ("C5", generate(FamilySpec.make("cycle", n=5))),
        ("P3", generate(FamilySpec.make("path", m=3))),
    ]


def operation_identity_reports() -> dict[str, IdentityReport]:
    base = identity_pairs()
    return {
        f"{name1}+{name2}": operation_identities(g1, g2)
        for name1, g1 in base
        for name2, g2 in base
    }


def check_operation_identities() -> CriterionResult:
    """Join, disjoint-union and Cartesian identities hold exactly on all
    pairs from the fixed five-graph set; the corona piecewise value holds
    whenever the two nourishing numbers differ; and the complement identity
    holds for the self-complementary 4-vertex path and 5-cycle under
    all-pairwise-disjoint labelings."""
    failures: list[str] = []
    reports = operation_identity_reports()
    for name, rep in reports.items():
        if not rep.join_equals_sum:
            failures.append(f"{name}: join {rep.join_omega} != {rep.omega_first + rep.omega_second}")
        if not rep.union_equals_max:
            failures.append(f"{name}: union {rep.union_omega} != max")
        if not rep.cartesian_equals_max:
            failures.append(f"{name}: cartesian {rep.cartesian_omega} != max")
        if not rep.corona_tie and not rep.corona_matches:
            failures.append(
                f"{name}: corona {rep.corona_omega} != piecewise {rep.corona_expected}"
            )
    for name, g in (
        ("P3", generate(FamilySpec.make("path", m=3))),
        ("C5", generate(FamilySpec.make("cycle", n=5))),
    ):
        comp = complement_identity_report(g)
        if not (comp.complement_is_strong and comp.equals_vertex_count):
            failures.append(f"complement identity failed on {name}: {comp.to_json()}")
    return CriterionResult(
        name="operation-identities",
        passed=not failures,
        detail=f"{len(reports)} ordered pairs plus 2 complement checks, "
        f"{len(failures)} failures",
        failures=failures[:20],
    )


def naive_clique_number(g: Graph) -> int:
    """Independent oracle: test every vertex subset for cliqueness.
    Exponential; intended for graphs with at most ~10 vertices."""
    if g.n == 0:
        raise DomainError("clique number requires at least one vertex")
    best = 1
    adj = g.adjacency
    for mask in range(1, 1 << g.n):
        members = [v for v in g.vertices if mask >> v & 1]
        if len(members) <= best:
            continue
        if all(b in adj[a] for a, b in combinations(members, 2)):
            best = len(members)
    return best


def check_clique_oracle(trials: int = 500, seed: int = 424242) -> CriterionResult:
    """Branch-and-bound clique number equals the all-subsets oracle on
    random graphs with at most 9 vertices."""
    rng = random.Random(seed)
    failures: list[str] = []
    for t in range(trials):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, rng.uniform(0.0, 1.0))
        fast = clique_number(g)
        slow = naive_clique_number(g)
        if fast != slow:
            failures.append(f"trial {t}: n={n} edges={sorted(g.edges)} {fast} != {slow}")
    return CriterionResult(
        name="clique-oracle-equivalence",
        passed=not failures,
        detail=f"{trials} random graphs (n <= 9), {len(failures)} disagreements",
        failures=failures[:20],
    )


def run_all() -> list[CriterionResult]:
    """Run every gate in order.  The diagnostic ledger gate passes as long
    as the ledger is complete; its mismatches are findings."""
    corpus = connected_corpus()
    return [
        check_sumset_equivalence(),
        check_universal_strong_construction(corpus),
        check_subgraph_heredity(),
        check_never_strong_transforms(corpus),
        check_uniform_admissibility(),
        check_nourish_verified_grid(),
        check_diagnostic_ledger(),
        check_operation_identities(),
        check_clique_oracle(),
    ]
