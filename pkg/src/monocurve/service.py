"""FastAPI service wrapping the core library.

The handler functions are plain request-model -> response-model functions so
the CLI can call them in-process; the HTTP layer is a thin wrapper that maps
domain errors onto status codes (input error -> 400, unmet precondition ->
409, internal consistency failure -> 500).
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import gorenstein, resolution
from .errors import (
    AllocationCapError,
    MonocurveError,
    NotApplicableError,
    PreconditionError,
)
from .semigroup import Sequence, principal_matrix, profile

SCAN_CAP = 10**6
MAX_WORKERS = 64


class AnalyzeRequest(BaseModel):
    sequence: list[int] = Field(min_length=4, max_length=4)


class ProfileModel(BaseModel):
    frobenius: int
    genus: int
    symmetric: bool


class BresinskyModel(BaseModel):
    c: list[int]
    d: dict[str, int]
    perm: list[int]


class PhiEntryModel(BaseModel):
    sign: int
    exponents: list[int]


class DeltaEntryModel(BaseModel):
    plus: list[int]
    minus: list[int]


class PresentationModel(BaseModel):
    sequence: list[int]
    phi: list[list[PhiEntryModel]]
    delta: list[DeltaEntryModel]
    last_twist: int
    socle_degree: int


class AnalyzeResponse(BaseModel):
    sequence: list[int]
    classification: str
    profile: ProfileModel
    principal_matrix: list[list[int]]
    bresinsky: BresinskyModel | None
    u: list[int] | None
    v: list[int] | None
    period: int | None
    presentation: PresentationModel | None


class FamilyRequest(BaseModel):
    sequence: list[int] = Field(min_length=4, max_length=4)
    kind: str = Field(pattern="^(u|v|diagonal)$")
    t_max: int = Field(ge=0)


class FamilyRowModel(BaseModel):
    t: int
    sequence: list[int]
    gcd: int
    coprime: bool
    classification: str


class FindingModel(BaseModel):
    t: int
    sequence: list[int]
    classification: str


class FamilyResponse(BaseModel):
    base: list[int]
    kind: str
    direction: list[int]
    rows: list[FamilyRowModel]
    findings: list[FindingModel]


class ScanRequest(BaseModel):
    sequence: list[int] = Field(min_length=4, max_length=4)
    step: list[int] = Field(min_length=4, max_length=4)
    t_start: int = Field(ge=0)
    t_end: int
    workers: int = Field(default=1, ge=1, le=MAX_WORKERS)
    force: bool = False


class ScanRowModel(BaseModel):
    t: int
    sequence: list[int]
    gcd: int
    classification: str


class ScanResponse(BaseModel):
    rows: list[ScanRowModel]


def _bresinsky_model(form: gorenstein.BresinskyForm) -> BresinskyModel:
    return BresinskyModel(c=list(form.c), d=form.d_values(), perm=list(form.perm))


def analyze(req: AnalyzeRequest) -> AnalyzeResponse:
    seq = Sequence(tuple(req.sequence))
    prof = profile(seq)
    cls = gorenstein.classify(seq)
    matrix = principal_matrix(seq).as_lists()
    bres = u = v = period = pres = None
    if cls.kind == gorenstein.GORENSTEIN_NON_CI:
        form = cls.form
        bres = _bresinsky_model(form)
        u = list(gorenstein.direction_to_original(
            form.perm, gorenstein.translation_vector_u(form)))
        v = list(gorenstein.direction_to_original(
            form.perm, gorenstein.translation_vector_v(form)))
        try:
            period = gorenstein.homogeneous_rows_period(seq).period
        except NotApplicableError:
            period = None
        pres = PresentationModel(
            **resolution.presentation_to_dict(resolution.build_presentation(seq, form))
        )
    return AnalyzeResponse(
        sequence=list(seq),
        classification=cls.kind,
        profile=ProfileModel(
            frobenius=prof.frobenius, genus=prof.genus, symmetric=prof.symmetric
        ),
        principal_matrix=matrix,
        bresinsky=bres,
        u=u,
        v=v,
        period=period,
        presentation=pres,
    )


def family(req: FamilyRequest) -> FamilyResponse:
    fam = gorenstein.generate_family(Sequence(tuple(req.sequence)), req.kind, req.t_max)
    return FamilyResponse(
        base=list(fam.base),
        kind=fam.kind,
        direction=list(fam.direction),
        rows=[
            FamilyRowModel(
                t=cert.t, sequence=list(cert.sequence), gcd=cert.gcd,
                coprime=cert.coprime, classification=cert.classification,
            )
            for cert in fam.certificates
        ],
        findings=[
            FindingModel(t=f.t, sequence=list(f.sequence), classification=f.classification)
            for f in fam.findings
        ],
    )


def scan(req: ScanRequest) -> ScanResponse:
    if req.t_end < req.t_start:
        raise MonocurveError(f"malformed range {req.t_start}..{req.t_end}")
    count = req.t_end - req.t_start + 1
    if count > SCAN_CAP and not req.force:
        raise AllocationCapError(
            f"scan of {count} classifications exceeds the {SCAN_CAP} cap; use force"
        )
    rows = gorenstein.scan_translations(
        Sequence(tuple(req.sequence)), tuple(req.step),
        req.t_start, req.t_end, workers=req.workers,
    )
    return ScanResponse(rows=[
        ScanRowModel(t=r.t, sequence=list(r.sequence), gcd=r.gcd,
                     classification=r.classification)
        for r in rows
    ])


def presentation(req: AnalyzeRequest) -> PresentationModel:
    seq = Sequence(tuple(req.sequence))
    cls = gorenstein.classify(seq)
    if cls.kind != gorenstein.GORENSTEIN_NON_CI:
        raise PreconditionError(
            f"sequence {tuple(seq)} classifies {cls.kind}, not GorensteinNonCI"
        )
    return PresentationModel(
        **resolution.presentation_to_dict(resolution.build_presentation(seq, cls.form))
    )


app = FastAPI(title="monocurve", version="0.1.0")

_STATUS_BY_EXIT = {2: 400, 3: 409, 4: 500}


@app.exception_handler(MonocurveError)
async def _domain_error_handler(request: Request, exc: MonocurveError):
    return JSONResponse(
        status_code=_STATUS_BY_EXIT.get(exc.exit_code, 400),
        content={"error": exc.code, "message": str(exc)},
    )


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/analyze", response_model=AnalyzeResponse)
def analyze_endpoint(req: AnalyzeRequest):
    return analyze(req)


@app.post("/family", response_model=FamilyResponse)
def family_endpoint(req: FamilyRequest):
    return family(req)


@app.post("/scan", response_model=ScanResponse)
def scan_endpoint(req: ScanRequest):
    return scan(req)


@app.post("/presentation", response_model=PresentationModel)
def presentation_endpoint(req: AnalyzeRequest):
    return presentation(req)


def main(host: str = "127.0.0.1", port: int = 8000):
    import uvicorn

    uvicorn.run(app, host=host, port=port)
