"""FastAPI wrapper over the handlers, one route per subcommand."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import handlers, schemas


def create_app() -> FastAPI:
    app = FastAPI(title="domgame", version="0.1.0")
    cache = handlers.SolverCache()

    @app.exception_handler(ValueError)
    async def _bad_request(request: Request, exc: ValueError) -> JSONResponse:
        # EdgeListError and TraceError are ValueErrors too
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/gamma", response_model=schemas.GammaResponse)
    def gamma(req: schemas.GammaRequest) -> schemas.GammaResponse:
        return handlers.handle_gamma(req, cache)

    @app.post("/cuts", response_model=schemas.CutsResponse)
    def cuts(req: schemas.CutsRequest) -> schemas.CutsResponse:
        return handlers.handle_cuts(req, cache)

    @app.post("/double-staller", response_model=schemas.DoubleStallerResponse)
    def double_staller(req: schemas.DoubleStallerRequest) -> schemas.DoubleStallerResponse:
        return handlers.handle_double_staller(req, cache)

    @app.post("/construct", response_model=schemas.ConstructResponse)
    def construct(req: schemas.ConstructRequest) -> schemas.ConstructResponse:
        return handlers.handle_construct(req)

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
        return handlers.handle_verify(req)

    @app.post("/scan", response_model=schemas.ScanResponse)
    def scan(req: schemas.ScanRequest) -> schemas.ScanResponse:
        return handlers.handle_scan(req)

    return app


app = create_app()

__all__ = ["app", "create_app"]
