"""Command-line front end.

Every subcommand is a thin client over the same operations layer the HTTP
service uses; work happens in-process and artifacts are flat JSON/CSV files
written atomically.

Exit codes (stable, for CI use):

* 0 - success (for ``verify`` with ``--require``: the property holds; for
      ``search``: the search completed, witness or not)
* 1 - a required property does not hold
* 2 - malformed input JSON (message includes the location)
* 3 - a documented precondition failed (message names it)
* 4 - a search budget or oracle cap was exceeded
"""

from __future__ import annotations

import json
import os
import sys
import tempfile
from pathlib import Path
from typing import Callable

import click
from pydantic import BaseModel, ValidationError

from . import __version__, acceptance
from .errors import BudgetExceededError, DomainError, OffsetOverflowError
from .nourish import compare, reports_to_csv, reports_to_json
from .service import ops
from .service.models import (
    DecideRequest,
    GenerateRequest,
    GraphModel,
    IdentitiesRequest,
    LabelingModel,
    LabelRequest,
    NourishRequest,
    SearchRequest,
    TransformRequest,
    VerifyRequest,
)

EXIT_PROPERTY_FAILED = 1
EXIT_MALFORMED = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4


class _MalformedInput(Exception):
    pass


def _load_json(path: str) -> object:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _MalformedInput(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _MalformedInput(
            f"malformed JSON in {path}: line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc


def _parse_model(model_cls: type[BaseModel], data: object, origin: str) -> BaseModel:
    try:
        return model_cls.model_validate(data)
    except ValidationError as exc:
        raise _MalformedInput(f"invalid {origin}: {exc}") from exc


def _dump(model: BaseModel | list | dict) -> str:
    if isinstance(model, BaseModel):
        payload = model.model_dump()
    elif isinstance(model, list):
        payload = [m.model_dump() if isinstance(m, BaseModel) else m for m in model]
    else:
        payload = model
    return json.dumps(payload, indent=2) + "\n"


def _write_text(path: str, text: str) -> None:
    """Atomic write: temp file in the target directory, then rename."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, out: str | None) -> None:
    if out:
        _write_text(out, text)
    else:
        click.echo(text, nl=False)


def _run(thunk: Callable[[], int | None]) -> None:
    try:
        code = thunk()
    except _MalformedInput as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_MALFORMED)
    except DomainError as exc:
        click.echo(f"precondition failed: {exc}", err=True)
        sys.exit(EXIT_PRECONDITION)
    except (BudgetExceededError, OffsetOverflowError) as exc:
        click.echo(f"budget exceeded: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    sys.exit(code or 0)


def _parse_params(text: str | None) -> dict[str, int]:
    if not text:
        return {}
    params: dict[str, int] = {}
    for chunk in text.replace(";", ",").split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise _MalformedInput(f"parameter {chunk!r} is not of the form name=value")
        name, _, value = chunk.partition("=")
        try:
            params[name.strip()] = int(value)
        except ValueError:
            raise _MalformedInput(f"parameter {chunk!r} has a non-integer value") from None
    return params


def _parse_ints(text: str, expected: int, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise _MalformedInput(f"{what} must be comma-separated integers, got {text!r}") from None
    if len(values) != expected:
        raise _MalformedInput(f"{what} needs {expected} integers, got {len(values)}")
    return values


@click.group()
@click.version_option(version=__version__, prog_name="iasi")
def main() -> None:
    """Integer additive set-labelings: generate, label, verify, transform,
    search, and cross-check published formulas."""


@main.command("gen")
@click.option("--family", required=True, help="Family name, e.g. helm.")
@click.option("--params", "params_text", default=None, help="Comma-separated name=value pairs, e.g. 'm=3,n=4'.")
@click.option("--power", default=1, show_default=True, help="Raise the generated graph to this power.")
@click.option("--out", default=None, help="Output path (stdout when omitted).")
def gen(family: str, params_text: str | None, power: int, out: str | None) -> None:
    """Generate a named family graph as Graph JSON."""

    def thunk() -> None:
        request = GenerateRequest(family=family, params=_parse_params(params_text), power=power)
        _emit(_dump(ops.generate_graph(request)), out)

    _run(thunk)


@main.command("label")
@click.option("--graph", "graph_path", required=True, help="Graph JSON input.")
@click.option("--mode", type=click.Choice(["strong", "uniform"]), default="strong", show_default=True)
@click.option("--k", type=int, default=None, help="Edge cardinality for uniform mode.")
@click.option("--divisors", default=None, help="Divisor pair a,b with a*b = k.")
@click.option("--out", default=None)
def label(graph_path: str, mode: str, k: int | None, divisors: str | None, out: str | None) -> None:
    """Construct a labeling (strong, or strongly k-uniform on bipartite input)."""

    def thunk() -> None:
        graph = _parse_model(GraphModel, _load_json(graph_path), "graph")
        pair = _parse_ints(divisors, 2, "divisors") if divisors else None
        request = LabelRequest(graph=graph, mode=mode, k=k, divisors=pair)
        _emit(_dump(ops.make_labeling(request)), out)

    _run(thunk)


@main.command("verify")
@click.option("--graph", "graph_path", required=True)
@click.option("--labeling", "labeling_path", required=True)
@click.option(
    "--require",
    type=click.Choice(["set_labeling", "set_indexer", "strong", "uniform", "completely_uniform"]),
    default=None,
    help="Exit 0 iff this property holds.",
)
@click.option("--k", type=int, default=None, help="With --require uniform: the exact cardinality.")
@click.option("--out", default=None)
def verify_cmd(
    graph_path: str, labeling_path: str, require: str | None, k: int | None, out: str | None
) -> None:
    """Verify a labeling and emit its property report."""

    def thunk() -> int:
        request = VerifyRequest(
            graph=_parse_model(GraphModel, _load_json(graph_path), "graph"),
            labeling=_parse_model(LabelingModel, _load_json(labeling_path), "labeling"),
        )
        report = ops.verify_labeling(request)
        _emit(_dump(report), out)
        if require is None:
            return 0
        holds = {
            "set_labeling": report.is_set_labeling,
            "set_indexer": report.is_set_indexer,
            "strong": report.is_strong,
            "uniform": report.uniform_k is not None and (k is None or report.uniform_k == k),
            "completely_uniform": report.completely_uniform is not None,
        }[require]
        return 0 if holds else EXIT_PROPERTY_FAILED

    _run(thunk)


@main.command("transform")
@click.option("--op", required=True, type=click.Choice(
    ["line", "total", "subdivide", "contract", "reduce", "complement", "join", "union", "cartesian", "corona"]
))
@click.option("--graph", "graph_path", required=True)
@click.option("--other", "other_path", default=None, help="Second graph for binary ops.")
@click.option("--labeling", "labeling_path", default=None, help="Carry this labeling across the transform.")
@click.option("--edge", default=None, help="Edge u,v for subdivide/contract.")
@click.option("--path", "path_text", default=None, help="Path u,w,v for reduce.")
@click.option("--out", default=None)
def transform(
    op: str,
    graph_path: str,
    other_path: str | None,
    labeling_path: str | None,
    edge: str | None,
    path_text: str | None,
    out: str | None,
) -> None:
    """Apply a structural transformation (with induced labeling when given)."""

    def thunk() -> None:
        request = TransformRequest(
            op=op,
            graph=_parse_model(GraphModel, _load_json(graph_path), "graph"),
            other=_parse_model(GraphModel, _load_json(other_path), "other graph")
            if other_path
            else None,
            labeling=_parse_model(LabelingModel, _load_json(labeling_path), "labeling")
            if labeling_path
            else None,
            edge=_parse_ints(edge, 2, "edge") if edge else None,
            path=_parse_ints(path_text, 3, "path") if path_text else None,
        )
        _emit(_dump(ops.transform(request)), out)

    _run(thunk)


@main.command("nourish")
@click.option("--grid", "grid_path", required=True, help="JSON list of family specs.")
@click.option("--csv", "csv_path", default=None, help="Write the report as CSV here.")
@click.option("--json", "json_path", default=None, help="Write the report as JSON here.")
def nourish(grid_path: str, csv_path: str | None, json_path: str | None) -> None:
    """Compare published formula values against the exact oracle over a grid."""

    def thunk() -> None:
        data = _load_json(grid_path)
        request = _parse_model(NourishRequest, {"grid": data}, "grid")
        rows = ops.nourish_grid(request)
        from .families import FamilySpec
        from .nourish import NourishReport

        reports = [
            NourishReport(
                FamilySpec.make(r.family, power=r.r, **r.params),
                r.omega,
                r.formula,
                r.match,
                r.note,
            )
            for r in rows
        ]
        if csv_path:
            _write_text(csv_path, reports_to_csv(reports))
        if json_path:
            _write_text(json_path, json.dumps(reports_to_json(reports), indent=2) + "\n")
        if not csv_path and not json_path:
            click.echo(json.dumps(reports_to_json(reports), indent=2))

    _run(thunk)


@main.command("decide")
@click.option("--graph", "graph_path", required=True)
@click.option("--k", type=int, required=True)
@click.option("--out", default=None)
def decide(graph_path: str, k: int, out: str | None) -> None:
    """Decide strongly k-uniform admissibility; include a witness when it holds."""

    def thunk() -> None:
        request = DecideRequest(
            graph=_parse_model(GraphModel, _load_json(graph_path), "graph"), k=k
        )
        _emit(_dump(ops.decide(request)), out)

    _run(thunk)


@main.command("search")
@click.option("--graph", "graph_path", required=True)
@click.option("--predicate", type=click.Choice(["strong", "strongly-uniform"]), default="strong", show_default=True)
@click.option("--k", type=int, default=None, help="Edge cardinality for strongly-uniform.")
@click.option("--max-element", type=int, required=True)
@click.option("--max-card", "max_cardinality", type=int, required=True)
@click.option("--budget", type=int, default=None, help="Candidate-labeling budget override.")
@click.option("--out", default=None)
def search(
    graph_path: str,
    predicate: str,
    k: int | None,
    max_element: int,
    max_cardinality: int,
    budget: int | None,
    out: str | None,
) -> None:
    """Bounded exhaustive search for a witness labeling.

    Absence means no labeling exists WITHIN THE BOUNDS; it is not a general
    non-existence claim."""

    def thunk() -> None:
        request = SearchRequest(
            graph=_parse_model(GraphModel, _load_json(graph_path), "graph"),
            predicate=predicate,
            k=k,
            max_element=max_element,
            max_cardinality=max_cardinality,
            budget=budget,
        )
        record = ops.search(request)
        _emit(_dump(record), out)
        if not record.admits:
            click.echo("no witness within bounds", err=True)

    _run(thunk)


@main.command("identities")
@click.option("--first", "first_path", required=True)
@click.option("--second", "second_path", required=True)
@click.option("--out", default=None)
def identities(first_path: str, second_path: str, out: str | None) -> None:
    """Check the union/join/Cartesian/corona nourishing-number identities."""

    def thunk() -> None:
        request = IdentitiesRequest(
            first=_parse_model(GraphModel, _load_json(first_path), "first graph"),
            second=_parse_model(GraphModel, _load_json(second_path), "second graph"),
        )
        _emit(_dump(ops.identities(request)), out)

    _run(thunk)


@main.command("check-paper")
@click.option(
    "--out-dir",
    default="check-paper-out",
    show_default=True,
    help="Directory for the reports and the discrepancy ledger.",
)
def check_paper(out_dir: str) -> None:
    """Run the full verification suite and write all reports.

    Writes acceptance.json, verified_grid.csv, diagnostic_ledger.csv and
    identities.json into the output directory.  Exits non-zero if any gate
    fails; recorded formula mismatches in the diagnostic ledger are
    findings, not failures."""

    def thunk() -> int:
        results = acceptance.run_all()
        for result in results:
            click.echo(result.line())
        out = Path(out_dir)
        _write_text(
            str(out / "acceptance.json"),
            json.dumps([r.to_json() for r in results], indent=2) + "\n",
        )
        _write_text(
            str(out / "verified_grid.csv"),
            reports_to_csv(compare(acceptance.verified_grid())),
        )
        _write_text(
            str(out / "diagnostic_ledger.csv"),
            reports_to_csv(acceptance.diagnostic_nourish_reports()),
        )
        identity_json = {
            name: report.to_json()
            for name, report in acceptance.operation_identity_reports().items()
        }
        _write_text(
            str(out / "identities.json"), json.dumps(identity_json, indent=2) + "\n"
        )
        return 0 if all(r.passed for r in results) else EXIT_PROPERTY_FAILED

    _run(thunk)


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("iasi.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
