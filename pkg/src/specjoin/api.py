"""HTTP front end: a thin FastAPI wrapper over the service layer."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from . import __version__
from .errors import SpecjoinError
from .schemas import SpectrumDocument, SpectrumRequest, VerifyReport, VerifyRequest
from .service import build_document, run_verify

app = FastAPI(
    title="specjoin",
    description=(
        "Normalized Laplacian spectra of joined unions of regular graphs and "
        "power graphs of cyclic groups, cross-checked against a dense "
        "eigensolver oracle."
    ),
    version=__version__,
)


class HealthResponse(BaseModel):
    status: str
    version: str


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/spectrum", response_model=SpectrumDocument, response_model_exclude_none=False)
def spectrum(request: SpectrumRequest) -> SpectrumDocument:
    """Compute a spectrum document.

    Domain failures (irregular edge-list input for the structural method,
    isolated vertices, oversized oracle requests, malformed descriptors)
    map to 400; a deviation beyond tolerance is reported in the document,
    not as an error.
    """
    try:
        return build_document(request)
    except (SpecjoinError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))


@app.post("/verify", response_model=VerifyReport)
def verify(request: VerifyRequest) -> VerifyReport:
    """Run a verification suite and return the per-case report."""
    try:
        return run_verify(request)
    except (SpecjoinError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))
