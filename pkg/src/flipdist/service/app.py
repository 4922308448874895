"""FastAPI service wrapping the core package."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import verify as verify_mod
from ..deletion import delete_many, theta
from ..distance import flip_distance
from ..errors import InvalidInputError, ResourceBudgetError
from ..families import family_pair
from ..flipgraph import diameter_table, enumerate_keys
from ..formats import from_json_obj, parse_any
from ..polygon import Triangulation, TriangulationPair, diagonals
from ..render import render_svg
from . import schemas as s


def _resolve(spec) -> Triangulation:
    if isinstance(spec, str):
        return parse_any(spec)
    return from_json_obj(spec.model_dump())


def _model(t: Triangulation) -> s.TriangulationModel:
    return s.TriangulationModel(n=t.n, interior=sorted(t.interior))


def create_app() -> FastAPI:
    app = FastAPI(title="flipdist", version="0.1.0")

    @app.exception_handler(InvalidInputError)
    async def invalid_input(_req: Request, err: InvalidInputError):
        return JSONResponse(status_code=400, content={"error": "invalid-input", "message": str(err)})

    @app.exception_handler(ResourceBudgetError)
    async def budget(_req: Request, err: ResourceBudgetError):
        return JSONResponse(
            status_code=503,
            content={
                "error": "resource-budget",
                "message": str(err),
                "lower": err.lower,
                "upper": err.upper,
            },
        )

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.get("/family/{tag}/{n}", response_model=s.FamilyResponse)
    def family(tag: str, n: int):
        pair = family_pair(tag, n)
        members = [_model(pair.first)]
        if pair.second != pair.first:
            members.append(_model(pair.second))
        return s.FamilyResponse(tag=tag.upper(), n=n, members=members)

    @app.post("/distance", response_model=s.SearchReportModel)
    def distance(req: s.DistanceRequest):
        report = flip_distance(_resolve(req.u), _resolve(req.v), req.budget)
        return s.SearchReportModel(
            distance=report.distance,
            expanded=report.expanded,
            flips=[s.FlipStep(removed=r, introduced=i) for r, i in report.witness.flips],
            reductions=list(report.reductions),
        )

    @app.get("/diameter", response_model=s.DiameterResponse)
    def diameter(max_n: int = 12, threads: int = 1, budget: int | None = None):
        rows = diameter_table(max_n, budget, threads)
        return s.DiameterResponse(
            rows=[
                s.DiameterRowModel(
                    n=r.n, count=r.count, diameter=r.diameter, dim=r.dim, bound=r.bound
                )
                for r in rows
            ]
        )

    @app.post("/theta", response_model=s.ThetaResponse)
    def theta_endpoint(req: s.ThetaRequest):
        pair = TriangulationPair(_resolve(req.u), _resolve(req.v))
        return s.ThetaResponse(vertex=req.vertex, theta=theta(pair, req.vertex, req.budget))

    @app.post("/delete", response_model=s.DeleteResponse)
    def delete(req: s.DeleteRequest):
        results = [delete_many(_resolve(t), req.vertices) for t in req.targets]
        return s.DeleteResponse(results=[_model(t) for t in results])

    @app.post("/verify", response_model=s.VerifyResponse)
    def run_verify(req: s.VerifyRequest):
        checks = verify_mod.run_suites(
            tuple(req.suites), seed=req.seed, recursion_max=req.recursion_max, stretch=req.stretch
        )
        return s.VerifyResponse(
            checks=[s.CheckResultModel(**c.as_dict()) for c in checks],
            failures=verify_mod.failures(checks),
        )

    @app.post("/render", response_model=s.RenderResponse)
    def render(req: s.RenderRequest):
        return s.RenderResponse(svg=render_svg(_resolve(req.target), req.size))

    @app.get("/enumerate/{n}", response_model=s.EnumerateResponse)
    def enumerate_endpoint(n: int, budget: int | None = None):
        keys = enumerate_keys(n, budget)
        width = max(1, (len(diagonals(n)) + 3) // 4)
        return s.EnumerateResponse(n=n, count=len(keys), keys=[f"{k:0{width}x}" for k in keys])

    return app
