"""FastAPI application exposing every analysis as a JSON endpoint.

All endpoints are stateless POSTs mirroring the CLI subcommands; input errors
(bad expressions, precondition violations) come back as HTTP 400 with a
position-carrying error payload, schema violations as FastAPI's usual 422.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from . import handlers, models


def create_app() -> FastAPI:
    app = FastAPI(
        title="quadric-stability",
        description="Torus GIT stability analysis of degree-d surface sections of the smooth quadric threefold",
        version=__version__,
    )

    @app.exception_handler(ValueError)
    async def value_error_handler(request: Request, exc: ValueError) -> JSONResponse:
        error = models.ErrorPayload(
            message=getattr(exc, "message", str(exc)),
            line=getattr(exc, "line", None),
            column=getattr(exc, "column", None),
        )
        return JSONResponse(status_code=400, content={"error": error.model_dump()})

    @app.get("/v1/health")
    async def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/v1/basis", response_model=models.AnalysisEnvelope[models.BasisPayload])
    async def basis(req: models.BasisRequest):
        return handlers.run("basis", req, handlers.handle_basis)

    @app.post("/v1/families", response_model=models.AnalysisEnvelope[models.FamiliesPayload])
    async def families(req: models.FamiliesRequest):
        return handlers.run("families", req, handlers.handle_families)

    @app.post("/v1/verify-lemmas", response_model=models.AnalysisEnvelope[models.VerifyLemmasPayload])
    async def verify_lemmas(req: models.VerifyLemmasRequest):
        return handlers.run("verify-lemmas", req, handlers.handle_verify_lemmas)

    @app.post("/v1/check", response_model=models.AnalysisEnvelope[models.CheckPayload])
    async def check(req: models.CheckRequest):
        return handlers.run("check", req, handlers.handle_check)

    @app.post("/v1/chart", response_model=models.AnalysisEnvelope[models.ChartPayload])
    async def chart(req: models.ChartRequest):
        return handlers.run("chart", req, handlers.handle_chart)

    @app.post("/v1/lct-bound", response_model=models.AnalysisEnvelope[models.LctBoundPayload])
    async def lct_bound(req: models.LctBoundRequest):
        return handlers.run("lct-bound", req, handlers.handle_lct_bound)

    @app.post("/v1/type-xi", response_model=models.AnalysisEnvelope[models.TypeXiPayload])
    async def type_xi(req: models.TypeXiRequest):
        return handlers.run("type-xi", req, handlers.handle_type_xi)

    @app.post("/v1/chow", response_model=models.AnalysisEnvelope[models.ChowPayload])
    async def chow(req: models.ChowRequest):
        return handlers.run("chow", req, handlers.handle_chow)

    @app.post("/v1/paper-suite", response_model=models.AnalysisEnvelope[models.PaperSuitePayload])
    async def paper_suite(req: models.PaperSuiteRequest):
        return handlers.run("paper-suite", req, handlers.handle_paper_suite)

    return app


app = create_app()
