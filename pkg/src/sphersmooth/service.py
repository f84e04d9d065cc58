"""HTTP service wrapping the core library.

Endpoints accept and return the same JSON documents as the CLI; pydantic
models validate the request shapes, the library validates the mathematics.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query
from pydantic import BaseModel, ConfigDict, Field

from . import catalog
from .datum import (
    decompose,
    localize,
    spherical_closure_result,
    validate_colored_cone,
    validate_datum,
)
from .diagrams import render_diagram
from .documents import SCHEMA, DocumentError, emit_document, emit_system, parse_document
from .rootsystems import parse_root_id
from .smoothness import check_factorial, is_smooth


class RootSystemModel(BaseModel):
    components: list[tuple[str, int]]
    torus_rank: int = 0


class WeightModel(BaseModel):
    fw: list[int] = []
    torus: list[int] = []


class RootModel(BaseModel):
    coeffs: list[int]
    m_coords: list[int]


class ColorModel(BaseModel):
    label: str
    rho: list[int]


class ConeModel(BaseModel):
    valuation_generators: list[list[int]] = []
    f: list[str] = []


class DatumDocument(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: str = Field(default=SCHEMA, alias="schema")
    root_system: RootSystemModel
    m_basis: list[WeightModel] = []
    sigma: list[RootModel] = []
    s_p: list[str] = []
    d_a: list[ColorModel] = []
    colored_cone: ConeModel | None = None
    marked: list[int] | None = None


class FindingModel(BaseModel):
    code: str
    message: str


class ValidationResponse(BaseModel):
    valid: bool
    findings: list[FindingModel] = []


class SmoothnessResponse(BaseModel):
    valid: bool
    findings: list[FindingModel] = []
    smooth: bool | None = None
    report: dict | None = None


class FactorialResponse(BaseModel):
    valid: bool
    findings: list[FindingModel] = []
    locally_factorial: bool | None = None
    details: list[str] = []


class LocalizeRequest(BaseModel):
    document: DatumDocument
    at: list[str]


class DiagramRequest(BaseModel):
    document: DatumDocument
    format: str = "text"


app = FastAPI(
    title="sphersmooth",
    description="Exact combinatorial smoothness checker for simple spherical varieties",
)


def _parse(doc: DatumDocument):
    try:
        return parse_document(doc.model_dump(by_alias=True))
    except DocumentError as exc:
        raise HTTPException(status_code=422, detail=str(exc))


def _findings(datum, cone):
    findings = list(validate_datum(datum).findings)
    if cone is not None and not findings:
        findings += list(validate_colored_cone(datum, cone).findings)
    return [FindingModel(code=f.code, message=f.message) for f in findings]


@app.get("/")
def index():
    return {
        "service": "sphersmooth",
        "schema": SCHEMA,
        "endpoints": [
            "POST /validate",
            "POST /smooth",
            "POST /factorial",
            "POST /transform/localize",
            "POST /transform/closure",
            "POST /transform/decompose",
            "GET /catalog",
            "GET /catalog/{id}",
            "POST /diagram",
        ],
    }


@app.post("/validate", response_model=ValidationResponse)
def validate(doc: DatumDocument):
    datum, cone, _ = _parse(doc)
    findings = _findings(datum, cone)
    return ValidationResponse(valid=not findings, findings=findings)


@app.post("/smooth", response_model=SmoothnessResponse)
def smooth(doc: DatumDocument):
    datum, cone, _ = _parse(doc)
    if cone is None:
        raise HTTPException(status_code=422, detail="document has no colored_cone")
    findings = _findings(datum, cone)
    if findings:
        return SmoothnessResponse(valid=False, findings=findings)
    rep = is_smooth(datum, cone, validate=False)
    return SmoothnessResponse(valid=True, smooth=rep.verdict, report=rep.as_dict())


@app.post("/factorial", response_model=FactorialResponse)
def factorial(doc: DatumDocument):
    datum, cone, _ = _parse(doc)
    if cone is None:
        raise HTTPException(status_code=422, detail="document has no colored_cone")
    findings = _findings(datum, cone)
    if findings:
        return FactorialResponse(valid=False, findings=findings)
    rep = check_factorial(datum, cone, validate=False)
    return FactorialResponse(
        valid=True, locally_factorial=rep.passed, details=list(rep.details)
    )


@app.post("/transform/localize")
def transform_localize(req: LocalizeRequest):
    datum, _, _ = _parse(req.document)
    try:
        ids = [parse_root_id(s) for s in req.at]
        for rid in ids:
            datum.root_system.flat_index(rid)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=f"unknown simple root: {exc}")
    loc, _ = localize(datum, ids)
    return emit_document(loc)


@app.post("/transform/closure")
def transform_closure(doc: DatumDocument):
    datum, _, _ = _parse(doc)
    res = spherical_closure_result(datum)
    return emit_system(res.system)


@app.post("/transform/decompose")
def transform_decompose(doc: DatumDocument):
    datum, _, _ = _parse(doc)
    res = spherical_closure_result(datum)
    return [emit_system(p.system) for p in decompose(res.system)]


@app.get("/catalog")
def catalog_list():
    return catalog.catalog_listing()


@app.get("/catalog/{eid}")
def catalog_show(
    eid: int,
    params: str | None = Query(default=None, description="comma-separated integers"),
    format: str = Query(default="json"),
):
    if eid not in catalog.ENTRIES:
        raise HTTPException(status_code=404, detail=f"no catalog entry {eid}")
    entry = catalog.ENTRIES[eid]
    values: tuple[int, ...] = ()
    if params:
        try:
            values = tuple(int(x) for x in params.split(","))
        except ValueError:
            raise HTTPException(status_code=422, detail="parameters must be integers")
    if len(values) != len(entry.param_names):
        if not entry.param_names and not values:
            values = ()
        else:
            raise HTTPException(
                status_code=422,
                detail=f"entry {eid} takes parameters {list(entry.param_names)} ({entry.domain_text})",
            )
    if not entry.domain(values):
        raise HTTPException(
            status_code=422, detail=f"parameters {values} outside domain ({entry.domain_text})"
        )
    inst = catalog.instantiate(eid, values)
    if format == "json":
        return emit_system(inst.system, inst.marked)
    if format in ("text", "svg"):
        from fastapi.responses import PlainTextResponse

        media = "image/svg+xml" if format == "svg" else "text/plain"
        return PlainTextResponse(
            render_diagram(inst.system, format, inst.marked), media_type=media
        )
    raise HTTPException(status_code=422, detail=f"unknown format {format!r}")


@app.post("/diagram")
def diagram(req: DiagramRequest):
    datum, _, marked = _parse(req.document)
    if req.format not in ("text", "svg"):
        raise HTTPException(status_code=422, detail=f"unknown format {req.format!r}")
    res = spherical_closure_result(datum)
    from fastapi.responses import PlainTextResponse

    media = "image/svg+xml" if req.format == "svg" else "text/plain"
    return PlainTextResponse(
        render_diagram(res.system, req.format, marked or frozenset()), media_type=media
    )
