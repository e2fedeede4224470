"""Pydantic request/response models for the analysis service.

Every response is an ``AnalysisEnvelope``: a versioned wrapper with the
command name, an echo of the input, the command-specific payload, and the
elapsed time.  Payloads are fully deterministic -- fixed field order,
canonical polynomial text, rationals as "p/q" strings, no timestamps --
so identical inputs serialize to identical payload bytes.
"""

from __future__ import annotations

from typing import Any, Generic, TypeVar

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = 1

P = TypeVar("P", bound=BaseModel)


# -- requests ---------------------------------------------------------------

class BasisRequest(BaseModel):
    d: int = Field(ge=3, description="degree of the hypersurface section")


class FamiliesRequest(BaseModel):
    d: int = Field(ge=3)
    strict: bool = Field(False, description="enumerate M<0 instead of M<=0")


class VerifyLemmasRequest(BaseModel):
    d: int = Field(ge=3)


class CheckRequest(BaseModel):
    d: int = Field(ge=3)
    f: str = Field(description="polynomial expression, or @family:<u>/<v>[:strict]")


class ChartRequest(BaseModel):
    d: int = Field(ge=3)
    f: str
    shift: str = Field("0", description="rational shift b/a of the chart center along the line")


class LctBoundRequest(BaseModel):
    d: int = Field(ge=3)
    f: str
    weights: tuple[int, int, int] = Field((2, 3, 4), description="positive weights for y1, y2, y3")


class TypeXiRequest(BaseModel):
    d: int = Field(ge=3)
    mus: list[str] = Field(description="floor(d/2)+1 rational coefficients, as p/q strings")


class ChowRequest(BaseModel):
    q: str = Field(description="the quadric form")
    f: str = Field(description="the degree-d form")
    chi: tuple[int, int, int, int, int] = Field(description="SL(5) diagonal weights, summing to zero")


class PaperSuiteRequest(BaseModel):
    pass


# -- payloads ---------------------------------------------------------------

class BasisPayload(BaseModel):
    d: int
    count: int
    monomials: list[str]


class FamilyInfo(BaseModel):
    slope: str
    strict: bool
    maximal: bool
    classification: str
    max_weight: int
    size: int
    members: list[str]


class FamiliesPayload(BaseModel):
    d: int
    strict: bool
    count: int
    families: list[FamilyInfo]


class AssertionInfo(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyLemmasPayload(BaseModel):
    d: int
    passed: bool
    checked_slopes: list[str]
    assertions: list[AssertionInfo]


class WitnessInfo(BaseModel):
    slope: str
    strict: bool
    classification: str
    singular_line: str | None
    base_point: str
    size: int


class CheckPayload(BaseModel):
    d: int
    form: str
    reduced_form: str
    verdict: str
    witnesses: list[WitnessInfo]


class ChartPayload(BaseModel):
    d: int
    form: str
    shift: str
    origin: list[str]
    chart_form: str
    multiplicity: int
    leading_form: str
    line_vanishing_order: int


class LctBoundPayload(BaseModel):
    d: int
    form: str
    weights: tuple[int, int, int]
    chart_form: str
    weighted_multiplicity: int
    lct_upper_bound: str
    below_one: bool


class OrbitInfo(BaseModel):
    closed: bool
    direction: str | None
    limit: str | None


class TypeXiPayload(BaseModel):
    d: int
    mus: list[str]
    form: str
    fixed_space: list[str]
    stabilized: bool
    torus_semistable: bool
    orbit: OrbitInfo


class ChowPayload(BaseModel):
    q: str
    f: str
    chi: tuple[int, int, int, int, int]
    deg_q: int
    deg_y: int
    mu_q: int
    mu_y: int
    combined: int
    verdict: str


class CriterionInfo(BaseModel):
    criterion: str
    passed: bool
    details: list[str]


class PaperSuitePayload(BaseModel):
    passed: bool
    criteria: list[CriterionInfo]


class ErrorPayload(BaseModel):
    message: str
    line: int | None = None
    column: int | None = None


# -- envelope ---------------------------------------------------------------

class AnalysisEnvelope(BaseModel, Generic[P]):
    """The versioned report wrapper shared by the HTTP API and the CLI."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=SCHEMA_VERSION, serialization_alias="schema")
    version: str
    command: str
    input: dict[str, Any]
    payload: P
    timing_ms: float
