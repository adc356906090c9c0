"""Pydantic request/response models shared by the HTTP API and the CLI."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .spectra import COMPARE_TOL, GROUP_TOL

SCHEMA_VERSION = 1

Method = Literal["structural", "oracle", "both"]
Suite = Literal["joined-union", "power", "families", "all"]
Status = Literal["PASS", "FAIL", "WARN", "INFO"]


class EigenvalueEntry(BaseModel):
    value: float
    multiplicity: int = Field(ge=1)
    source: Literal["structural", "quotient", "closed_form", "oracle"]


class DeviationReport(BaseModel):
    max_deviation: float
    tol: float
    passed: bool


class Tolerances(BaseModel):
    compare: float = COMPARE_TOL
    group: float = GROUP_TOL


class SpectrumRequest(BaseModel):
    """Exactly one graph source: a cyclic-group order, a family descriptor
    ("name:p1,p2"), or edge-list text."""

    power_n: int | None = Field(None, ge=2)
    family: str | None = None
    edges: str | None = None
    descriptor: str | None = None
    method: Method = "both"
    tol: float = Field(COMPARE_TOL, gt=0)

    @model_validator(mode="after")
    def _one_source(self):
        sources = [s is not None for s in (self.power_n, self.family, self.edges)]
        if sum(sources) != 1:
            raise ValueError("exactly one of power_n, family, edges is required")
        return self


class SpectrumDocument(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    descriptor: str
    order: int
    method: Method
    eigenvalues: list[EigenvalueEntry]
    deviations: DeviationReport | None = None
    version: str
    tolerances: Tolerances
    timestamp: str | None = None

    @model_validator(mode="after")
    def _consistent(self):
        total = sum(e.multiplicity for e in self.eigenvalues)
        if total != self.order:
            raise ValueError(f"multiplicities sum to {total}, expected order {self.order}")
        if (self.deviations is not None) != (self.method == "both"):
            raise ValueError("deviations must be present exactly when method is 'both'")
        return self


class VerifyRequest(BaseModel):
    suite: Suite = "all"
    max_n: int = Field(300, ge=3)
    tol: float = Field(COMPARE_TOL, gt=0)
    jobs: int = Field(1, ge=1)
    cases: int = Field(200, ge=1)
    seed: int = 1883


class VerifyCase(BaseModel):
    name: str
    status: Status
    deviation: float | None = None
    detail: str = ""


class VerifyReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    suite: Suite
    max_n: int
    tol: float
    cases: list[VerifyCase]
    counts: dict[str, int]
    passed: bool
    version: str
    timestamp: str | None = None
