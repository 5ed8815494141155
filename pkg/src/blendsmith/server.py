"""HTTP face of the generator.

Three endpoints: generate names from a description, rerank previously
returned names under new weights (stateless; the client echoes the scored
names back), and a health check reporting resource checksums.  Schema
violations come back as 400, pipeline failures as 422.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Union

from fastapi import FastAPI, Request
from fastapi.encoders import jsonable_encoder
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field, field_validator

from . import __version__
from . import engine
from .errors import PipelineError
from .resources import ResourceStore, load_resource_dir
from .scoring import AppealWeights, DEFAULT_WEIGHTS


class WeightsModel(BaseModel):
    readability: float = Field(DEFAULT_WEIGHTS.readability, allow_inf_nan=False)
    pronounceability: float = Field(DEFAULT_WEIGHTS.pronounceability, allow_inf_nan=False)
    memorability: float = Field(DEFAULT_WEIGHTS.memorability, allow_inf_nan=False)
    uniqueness: float = Field(DEFAULT_WEIGHTS.uniqueness, allow_inf_nan=False)

    def to_weights(self) -> AppealWeights:
        return AppealWeights(
            self.readability, self.pronounceability, self.memorability, self.uniqueness
        )


class GenerateRequestModel(BaseModel):
    description: str
    top_k: int = Field(30, ge=1)
    diversify: bool = True
    iterations: int = Field(30, ge=1)
    weights: Optional[WeightsModel] = None
    max_per_root: int = Field(5, ge=0)


class RerankNameModel(BaseModel):
    display: str = Field(min_length=1)
    syllables: list[str] = Field(min_length=1)
    readability: float = Field(allow_inf_nan=False)
    pronounceability: float = Field(allow_inf_nan=False)
    memorability: float = Field(allow_inf_nan=False)
    uniqueness: float = Field(allow_inf_nan=False)
    sources: list[str] = []

    @field_validator("syllables")
    @classmethod
    def _no_blank_syllables(cls, value: list[str]) -> list[str]:
        if any(not s for s in value):
            raise ValueError("syllables must be non-empty strings")
        return value

    def to_item(self) -> engine.RerankItem:
        return engine.RerankItem(
            display=self.display,
            syllables=tuple(self.syllables),
            readability=self.readability,
            pronounceability=self.pronounceability,
            memorability=self.memorability,
            uniqueness=self.uniqueness,
            sources=tuple(self.sources),
        )


class RerankRequestModel(BaseModel):
    names: list[RerankNameModel]
    weights: Optional[WeightsModel] = None
    diversify: bool = True
    iterations: int = Field(30, ge=1)
    top_k: Optional[int] = Field(None, ge=1)


def create_app(resources: Union[ResourceStore, str, Path]) -> FastAPI:
    """Build the service around one shared read-only resource store."""
    if isinstance(resources, ResourceStore):
        store = resources
    else:
        store = load_resource_dir(resources)

    app = FastAPI(title="blendsmith", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def malformed_request(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400, content={"detail": jsonable_encoder(exc.errors())}
        )

    @app.exception_handler(PipelineError)
    async def pipeline_failure(request: Request, exc: PipelineError):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.post("/api/generate")
    def api_generate(body: GenerateRequestModel) -> JSONResponse:
        request = engine.GenerationRequest(
            description=body.description,
            top_k=body.top_k,
            diversify=body.diversify,
            iterations=body.iterations,
            weights=body.weights.to_weights() if body.weights else None,
            max_per_root=body.max_per_root,
        )
        response = engine.generate(request, store)
        return JSONResponse(response.as_dict())

    @app.post("/api/rerank")
    def api_rerank(body: RerankRequestModel) -> JSONResponse:
        weights = body.weights.to_weights() if body.weights else DEFAULT_WEIGHTS
        response = engine.rerank(
            [name.to_item() for name in body.names],
            weights,
            diversify=body.diversify,
            iterations=body.iterations,
            top_k=body.top_k,
        )
        return JSONResponse(response.as_dict())

    @app.get("/api/health")
    def api_health() -> dict:
        return {
            "status": "ok",
            "version": __version__,
            "resources": dict(store.checksums),
        }

    return app
