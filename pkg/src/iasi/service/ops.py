"""Operations layer shared by the HTTP routes and the CLI.

Every function takes a request model and returns a response model, raising
the package's error types on bad input; transports decide how to surface
those (HTTP status codes or process exit codes).
"""

from __future__ import annotations

import os

from .. import acceptance
from ..construct import (
    DEFAULT_SEARCH_BUDGET,
    SearchBounds,
    bounded_search,
    construct_strong,
    construct_strongly_k_uniform_bipartite,
    decide_strongly_k_uniform,
)
from ..errors import DomainError
from ..families import FamilySpec, generate
from ..graphs import (
    Graph,
    cartesian_product,
    complement,
    corona,
    disjoint_union,
    join,
    power,
)
from ..labeling import (
    Labeling,
    PropertyReport,
    induce_on_contraction,
    induce_on_line_graph,
    induce_on_reduction,
    induce_on_subdivision,
    induce_on_total_graph,
    verify,
)
from ..nourish import DEFAULT_OMEGA_CAP, NourishReport, compare, operation_identities
from ..sumsets import IntSet
from .models import (
    DecideRequest,
    GenerateRequest,
    GraphModel,
    IdentitiesRequest,
    IdentityReportModel,
    LabelingModel,
    LabelRequest,
    NourishRequest,
    NourishRowModel,
    PropertyReportModel,
    SearchRequest,
    TransformRequest,
    TransformResponse,
    VerifyRequest,
    WitnessRecordModel,
)

OMEGA_CAP_ENV = "IASI_OMEGA_CAP"
SEARCH_BUDGET_ENV = "IASI_SEARCH_BUDGET"


def omega_cap() -> int:
    return int(os.environ.get(OMEGA_CAP_ENV, DEFAULT_OMEGA_CAP))


def search_budget() -> int:
    return int(os.environ.get(SEARCH_BUDGET_ENV, DEFAULT_SEARCH_BUDGET))


def graph_to_model(g: Graph) -> GraphModel:
    return GraphModel(n=g.n, edges=list(g.sorted_edges), roles=dict(sorted(g.roles.items())))


def graph_from_model(model: GraphModel) -> Graph:
    return Graph.make(model.n, model.edges, model.roles)


def labeling_to_model(f: Labeling) -> LabelingModel:
    return LabelingModel(
        vertex_labels={v: s.to_json() for v, s in sorted(f.vertex_labels.items())}
    )


def labeling_from_model(model: LabelingModel) -> Labeling:
    return Labeling({v: IntSet.from_iterable(xs) for v, xs in model.vertex_labels.items()})


def report_to_model(report: PropertyReport) -> PropertyReportModel:
    return PropertyReportModel(
        is_set_labeling=report.is_set_labeling,
        is_set_indexer=report.is_set_indexer,
        is_strong=report.is_strong,
        strong_vacuous=report.strong_vacuous,
        failing_edges=[
            (edge, cu, cv, ce) for edge, cu, cv, ce in report.failing_edges
        ],
        uniform_k=report.uniform_k,
        completely_uniform=report.completely_uniform,
        vertex_set_indexing_numbers=dict(sorted(report.vertex_set_indexing_numbers.items())),
    )


def nourish_row(report: NourishReport) -> NourishRowModel:
    return NourishRowModel(
        family=report.spec.family,
        params=report.spec.params_dict(),
        r=report.spec.power,
        omega=report.omega_oracle,
        formula=report.formula_value,
        match=report.match,
        note=report.note,
    )


def generate_graph(request: GenerateRequest) -> GraphModel:
    spec = FamilySpec.make(request.family, power=request.power, **request.params)
    g = generate(spec)
    if spec.power > 1:
        g = power(g, spec.power)
    return graph_to_model(g)


def make_labeling(request: LabelRequest) -> LabelingModel:
    g = graph_from_model(request.graph)
    if request.mode == "strong":
        f = construct_strong(g)
    else:
        if request.k is None:
            raise DomainError("uniform labeling requires k")
        divisors = request.divisors
        if divisors is None:
            from ..construct import balanced_divisors

            divisors = balanced_divisors(request.k)
        f = construct_strongly_k_uniform_bipartite(g, request.k, divisors)
    return labeling_to_model(f)


def verify_labeling(request: VerifyRequest) -> PropertyReportModel:
    g = graph_from_model(request.graph)
    f = labeling_from_model(request.labeling)
    return report_to_model(verify(g, f))


def transform(request: TransformRequest) -> TransformResponse:
    g = graph_from_model(request.graph)
    f = labeling_from_model(request.labeling) if request.labeling else None
    op = request.op

    if op in ("join", "union", "cartesian", "corona"):
        if f is not None:
            raise DomainError(f"no induced labeling rule for {op}")
        if request.other is None:
            raise DomainError(f"{op} requires a second graph")
        other = graph_from_model(request.other)
        build = {
            "join": join,
            "union": disjoint_union,
            "cartesian": cartesian_product,
            "corona": corona,
        }[op]
        return TransformResponse(graph=graph_to_model(build(g, other)))

    if op == "complement":
        if f is not None:
            raise DomainError("no induced labeling rule for complement")
        return TransformResponse(graph=graph_to_model(complement(g)))

    if op == "line":
        if f is not None:
            lg, lf = induce_on_line_graph(g, f)
            return TransformResponse(graph=graph_to_model(lg), labeling=labeling_to_model(lf))
        from ..transforms import line_graph

        lg, _ = line_graph(g)
        return TransformResponse(graph=graph_to_model(lg))

    if op == "total":
        if f is not None:
            tg, tf = induce_on_total_graph(g, f)
            return TransformResponse(graph=graph_to_model(tg), labeling=labeling_to_model(tf))
        from ..transforms import total_graph

        tg, _ = total_graph(g)
        return TransformResponse(graph=graph_to_model(tg))

    if op == "subdivide":
        if request.edge is None:
            raise DomainError("subdivide requires an edge")
        if f is not None:
            sg, sf, w = induce_on_subdivision(g, f, request.edge)
            return TransformResponse(
                graph=graph_to_model(sg), labeling=labeling_to_model(sf), new_vertex=w
            )
        from ..transforms import subdivide

        sg, w = subdivide(g, request.edge)
        return TransformResponse(graph=graph_to_model(sg), new_vertex=w)

    if op == "contract":
        if request.edge is None:
            raise DomainError("contract requires an edge")
        if f is not None:
            cg, cf, merged, vmap = induce_on_contraction(g, f, request.edge)
            return TransformResponse(
                graph=graph_to_model(cg),
                labeling=labeling_to_model(cf),
                merged_vertex=merged,
                vertex_map=vmap,
            )
        from ..transforms import contract

        cg, merged, vmap = contract(g, request.edge)
        return TransformResponse(
            graph=graph_to_model(cg), merged_vertex=merged, vertex_map=vmap
        )

    if op == "reduce":
        if request.path is None:
            raise DomainError("reduce requires a path (u, w, v)")
        if f is not None:
            rg, rf = induce_on_reduction(g, f, request.path)
            return TransformResponse(graph=graph_to_model(rg), labeling=labeling_to_model(rf))
        from ..transforms import reduce_path

        return TransformResponse(graph=graph_to_model(reduce_path(g, request.path)))

    raise DomainError(f"unknown transform op {op!r}")


def nourish_grid(request: NourishRequest) -> list[NourishRowModel]:
    grid = [
        FamilySpec.make(m.family, power=m.power, **m.params) for m in request.grid
    ]
    return [nourish_row(r) for r in compare(grid, omega_cap=omega_cap())]


def decide(request: DecideRequest) -> WitnessRecordModel:
    g = graph_from_model(request.graph)
    decision = decide_strongly_k_uniform(g, request.k)
    return WitnessRecordModel(
        admits=decision.admits,
        reason=decision.reason,
        witness=labeling_to_model(decision.witness) if decision.witness else None,
        bounds=decision.census.to_json(),
    )


def search(request: SearchRequest) -> WitnessRecordModel:
    g = graph_from_model(request.graph)
    bounds = SearchBounds(request.max_element, request.max_cardinality)
    budget = request.budget if request.budget is not None else search_budget()
    witness = bounded_search(
        g, bounds, predicate=request.predicate, k=request.k, budget=budget
    )
    if witness is None:
        return WitnessRecordModel(
            admits=False,
            reason="no witness within bounds",
            witness=None,
            bounds=bounds.to_json(),
        )
    return WitnessRecordModel(
        admits=True,
        reason="witness found by exhaustive search",
        witness=labeling_to_model(witness),
        bounds=bounds.to_json(),
    )


def identities(request: IdentitiesRequest) -> IdentityReportModel:
    g1 = graph_from_model(request.first)
    g2 = graph_from_model(request.second)
    report = operation_identities(g1, g2, omega_cap=omega_cap())
    return IdentityReportModel(**report.to_json())


def run_acceptance() -> list[acceptance.CriterionResult]:
    return acceptance.run_all()
