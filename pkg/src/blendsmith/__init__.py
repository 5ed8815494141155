"""Blend syllables from a description into scored brand-name candidates."""

__version__ = "0.1.0"

from .engine import (
    GenerationRequest,
    GenerationResponse,
    RerankItem,
    generate,
    rerank,
)
from .errors import (
    BlendsmithError,
    PipelineError,
    RankError,
    ResourceError,
    ScoreError,
)
from .ranking import (
    diversify_select,
    fit_weights,
    kendall_tau,
    ndcg,
    rank_by_appeal,
)
from .resources import ResourceStore, load_resource_dir
from .scoring import AppealWeights, DEFAULT_WEIGHTS

__all__ = [
    "AppealWeights",
    "BlendsmithError",
    "DEFAULT_WEIGHTS",
    "GenerationRequest",
    "GenerationResponse",
    "PipelineError",
    "RankError",
    "RerankItem",
    "ResourceError",
    "ResourceStore",
    "ScoreError",
    "__version__",
    "diversify_select",
    "fit_weights",
    "generate",
    "kendall_tau",
    "load_resource_dir",
    "ndcg",
    "rank_by_appeal",
    "rerank",
]
