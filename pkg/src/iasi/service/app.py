"""FastAPI application exposing the library over JSON endpoints."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import BudgetExceededError, DomainError, OffsetOverflowError
from . import ops
from .models import (
    DecideRequest,
    GenerateRequest,
    GraphModel,
    HealthResponse,
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

app = FastAPI(
    title="iasi",
    description=(
        "Integer additive set-labelings of graphs: generation, verification, "
        "construction, bounded search, and formula-versus-oracle reports."
    ),
    version=__version__,
)


@app.exception_handler(DomainError)
async def domain_error_handler(request: Request, exc: DomainError) -> JSONResponse:
    return JSONResponse(
        status_code=400, content={"code": "precondition", "message": str(exc)}
    )


@app.exception_handler(BudgetExceededError)
async def budget_error_handler(
    request: Request, exc: BudgetExceededError
) -> JSONResponse:
    return JSONResponse(
        status_code=400, content={"code": "budget_exceeded", "message": str(exc)}
    )


@app.exception_handler(OffsetOverflowError)
async def overflow_error_handler(
    request: Request, exc: OffsetOverflowError
) -> JSONResponse:
    return JSONResponse(
        status_code=400, content={"code": "budget_exceeded", "message": str(exc)}
    )


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/generate", response_model=GraphModel)
def generate(request: GenerateRequest) -> GraphModel:
    return ops.generate_graph(request)


@app.post("/label", response_model=LabelingModel)
def label(request: LabelRequest) -> LabelingModel:
    return ops.make_labeling(request)


@app.post("/verify", response_model=PropertyReportModel)
def verify(request: VerifyRequest) -> PropertyReportModel:
    return ops.verify_labeling(request)


@app.post("/transform", response_model=TransformResponse)
def transform(request: TransformRequest) -> TransformResponse:
    return ops.transform(request)


@app.post("/nourish", response_model=list[NourishRowModel])
def nourish(request: NourishRequest) -> list[NourishRowModel]:
    return ops.nourish_grid(request)


@app.post("/decide", response_model=WitnessRecordModel)
def decide(request: DecideRequest) -> WitnessRecordModel:
    return ops.decide(request)


@app.post("/search", response_model=WitnessRecordModel)
def search(request: SearchRequest) -> WitnessRecordModel:
    return ops.search(request)


@app.post("/identities", response_model=IdentityReportModel)
def identities(request: IdentitiesRequest) -> IdentityReportModel:
    return ops.identities(request)
