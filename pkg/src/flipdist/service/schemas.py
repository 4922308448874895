"""Request and response models for the HTTP service.

A triangulation argument is either a structured object or a string
(family literal like ``A-:12``, the text format, or inline JSON).
"""

from __future__ import annotations

from pydantic import BaseModel, Field

TriSpec = "str | TriangulationModel"


class TriangulationModel(BaseModel):
    n: int
    interior: list[tuple[int, int]]


class FlipStep(BaseModel):
    removed: tuple[int, int]
    introduced: tuple[int, int]


class DistanceRequest(BaseModel):
    u: str | TriangulationModel
    v: str | TriangulationModel
    budget: int | None = None


class SearchReportModel(BaseModel):
    distance: int
    expanded: int
    flips: list[FlipStep]
    reductions: list[str]


class FamilyResponse(BaseModel):
    tag: str
    n: int
    members: list[TriangulationModel]


class DiameterRowModel(BaseModel):
    n: int
    count: int
    diameter: int
    dim: int
    bound: int


class DiameterResponse(BaseModel):
    rows: list[DiameterRowModel]


class ThetaRequest(BaseModel):
    u: str | TriangulationModel
    v: str | TriangulationModel
    vertex: int
    budget: int | None = None


class ThetaResponse(BaseModel):
    vertex: int
    theta: int


class DeleteRequest(BaseModel):
    targets: list[str | TriangulationModel] = Field(min_length=1, max_length=2)
    vertices: list[int]


class DeleteResponse(BaseModel):
    results: list[TriangulationModel]


class VerifyRequest(BaseModel):
    suites: list[str] = ["small", "recursion", "prop11", "properties"]
    seed: int = 20130617
    recursion_max: int = 14
    stretch: bool = False


class CheckResultModel(BaseModel):
    name: str
    status: str
    expected: str
    observed: str
    claim: str


class VerifyResponse(BaseModel):
    checks: list[CheckResultModel]
    failures: int


class RenderRequest(BaseModel):
    target: str | TriangulationModel
    size: int = 400


class RenderResponse(BaseModel):
    svg: str


class EnumerateResponse(BaseModel):
    n: int
    count: int
    keys: list[str]
