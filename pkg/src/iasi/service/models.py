"""Pydantic request/response models.

These mirror the wire formats exactly: a graph is ``{"n", "edges", "roles"}``
with lexicographically sorted edges, a labeling is ``{"vertex_labels"}`` with
sorted integer arrays, and witness/decision records are
``{"admits", "reason", "witness", "bounds"}``.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

TransformOp = Literal[
    "line",
    "total",
    "subdivide",
    "contract",
    "reduce",
    "complement",
    "join",
    "union",
    "cartesian",
    "corona",
]

LabelMode = Literal["strong", "uniform"]

SearchPredicate = Literal["strong", "strongly-uniform"]


class GraphModel(BaseModel):
    n: int
    edges: list[tuple[int, int]] = Field(default_factory=list)
    roles: dict[int, str] = Field(default_factory=dict)


class LabelingModel(BaseModel):
    vertex_labels: dict[int, list[int]]


class FamilySpecModel(BaseModel):
    family: str
    params: dict[str, int] = Field(default_factory=dict)
    power: int = 1


class GenerateRequest(BaseModel):
    family: str
    params: dict[str, int] = Field(default_factory=dict)
    power: int = 1


class LabelRequest(BaseModel):
    graph: GraphModel
    mode: LabelMode = "strong"
    k: Optional[int] = None
    divisors: Optional[tuple[int, int]] = None


class VerifyRequest(BaseModel):
    graph: GraphModel
    labeling: LabelingModel


class PropertyReportModel(BaseModel):
    is_set_labeling: bool
    is_set_indexer: bool
    is_strong: bool
    strong_vacuous: bool
    failing_edges: list[tuple[tuple[int, int], int, int, int]]
    uniform_k: Optional[int]
    completely_uniform: Optional[tuple[int, int]]
    vertex_set_indexing_numbers: dict[int, int]


class TransformRequest(BaseModel):
    op: TransformOp
    graph: GraphModel
    other: Optional[GraphModel] = None
    labeling: Optional[LabelingModel] = None
    edge: Optional[tuple[int, int]] = None
    path: Optional[tuple[int, int, int]] = None


class TransformResponse(BaseModel):
    graph: GraphModel
    labeling: Optional[LabelingModel] = None
    new_vertex: Optional[int] = None
    merged_vertex: Optional[int] = None
    vertex_map: Optional[dict[int, int]] = None


class NourishRequest(BaseModel):
    grid: list[FamilySpecModel]


class NourishRowModel(BaseModel):
    family: str
    params: dict[str, int]
    r: int
    omega: Optional[int]
    formula: Optional[int]
    match: Optional[bool]
    note: str = ""


class DecideRequest(BaseModel):
    graph: GraphModel
    k: int


class WitnessRecordModel(BaseModel):
    """Shared shape for decision and search outcomes."""

    admits: bool
    reason: str
    witness: Optional[LabelingModel]
    bounds: dict


class SearchRequest(BaseModel):
    graph: GraphModel
    predicate: SearchPredicate = "strong"
    k: Optional[int] = None
    max_element: int
    max_cardinality: int
    budget: Optional[int] = None


class IdentitiesRequest(BaseModel):
    first: GraphModel
    second: GraphModel


class IdentityReportModel(BaseModel):
    omega_first: int
    omega_second: int
    union_omega: int
    join_omega: int
    cartesian_omega: int
    corona_omega: int
    union_equals_max: bool
    join_equals_sum: bool
    cartesian_equals_max: bool
    corona_expected: int
    corona_matches: bool
    corona_tie: bool


class HealthResponse(BaseModel):
    status: str
    version: str
