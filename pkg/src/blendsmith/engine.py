"""End-to-end name generation and stateless re-ranking.

`generate` runs the whole chain (description to scored, optionally
diversified names); `rerank` reorders previously generated names under new
weights without touching the resource store, which keeps the HTTP rerank
endpoint stateless.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import NoRootsError
from .pipeline import (
    RuleTable,
    build_syllable_pool,
    extract_roots,
    generate_blends,
    expand_related,
    tag_pos,
    tokenize,
)
from .ranking import diversify_select, rank_by_appeal
from .resources import ResourceStore
from .scoring import (
    AppealWeights,
    Candidate,
    DEFAULT_WEIGHTS,
    score_candidates,
)


@dataclass(frozen=True)
class GenerationRequest:
    description: str
    top_k: int = 30
    diversify: bool = True
    iterations: int = 30
    weights: Optional[AppealWeights] = None
    max_per_root: int = 5

    def __post_init__(self):
        if self.top_k < 1:
            raise ValueError("top_k must be at least 1")
        if self.iterations < 1:
            raise ValueError("iterations must be at least 1")
        if self.max_per_root < 0:
            raise ValueError("max_per_root must be non-negative")


@dataclass(frozen=True)
class NameReport:
    display: str
    appeal: float
    readability: float
    pronounceability: float
    memorability: float
    uniqueness: float
    syllables: tuple[str, ...]
    sources: tuple[str, ...]

    def as_dict(self) -> dict:
        return {
            "display": self.display,
            "appeal": self.appeal,
            "readability": self.readability,
            "pronounceability": self.pronounceability,
            "memorability": self.memorability,
            "uniqueness": self.uniqueness,
            "syllables": list(self.syllables),
            "sources": list(self.sources),
        }


@dataclass(frozen=True)
class GenerationResponse:
    names: tuple[NameReport, ...]
    candidate_count: int
    elapsed_ms: int

    def as_dict(self, include_elapsed: bool = True) -> dict:
        payload = {
            "names": [name.as_dict() for name in self.names],
            "candidate_count": self.candidate_count,
        }
        if include_elapsed:
            payload["elapsed_ms"] = self.elapsed_ms
        return payload


def _report(candidate: Candidate) -> NameReport:
    scores = candidate.scores
    return NameReport(
        display=candidate.display,
        appeal=candidate.appeal,
        readability=scores.readability,
        pronounceability=scores.pronounceability,
        memorability=scores.memorability,
        uniqueness=scores.uniqueness,
        syllables=candidate.syllable_texts,
        sources=candidate.raw.sources,
    )


def generate(request: GenerationRequest, store: ResourceStore) -> GenerationResponse:
    """Run tokenize, tag, expand, syllabify, blend, score, and order."""
    started = time.perf_counter()
    tokens = tokenize(request.description)
    roots = extract_roots(tokens, store.stopwords)
    tagged = tag_pos(roots, store.pos_lexicon)
    if not tagged:
        raise NoRootsError("no taggable words in the description")
    related = expand_related(
        tagged, store.synonyms, store.similes, request.max_per_root
    )
    pool = build_syllable_pool(related, store.hyphenation)
    raw = generate_blends(pool, RuleTable())
    weights = request.weights or DEFAULT_WEIGHTS
    scored = score_candidates(raw, store, weights)
    if request.diversify:
        ordered = diversify_select(scored, request.iterations).picks
    else:
        ordered = rank_by_appeal(scored)
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    return GenerationResponse(
        names=tuple(_report(c) for c in ordered[: request.top_k]),
        candidate_count=len(scored),
        elapsed_ms=elapsed_ms,
    )


@dataclass(frozen=True)
class RerankItem:
    """A previously generated name as the client echoes it back."""

    display: str
    syllables: tuple[str, ...]
    readability: float
    pronounceability: float
    memorability: float
    uniqueness: float
    sources: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.syllables or any(not s for s in self.syllables):
            raise ValueError("syllables must be non-empty strings")
        for value in self.normalized():
            if not math.isfinite(value):
                raise ValueError("scores must be finite")

    def normalized(self) -> tuple[float, float, float, float]:
        return (
            self.readability,
            self.pronounceability,
            self.memorability,
            self.uniqueness,
        )


@dataclass(frozen=True)
class _Reweighted:
    item: RerankItem
    appeal: float

    @property
    def text(self) -> str:
        return "".join(s.lower() for s in self.item.syllables)

    @property
    def syllable_texts(self) -> tuple[str, ...]:
        return tuple(s.lower() for s in self.item.syllables)


def rerank(
    items: Sequence[RerankItem],
    weights: AppealWeights,
    diversify: bool = True,
    iterations: int = 30,
    top_k: Optional[int] = None,
) -> GenerationResponse:
    """Reorder already-scored names under new weights, store-free."""
    started = time.perf_counter()
    reweighted = []
    seen = set()
    for item in items:
        entry = _Reweighted(
            item=item,
            appeal=sum(w * s for w, s in zip(weights.as_tuple(), item.normalized())),
        )
        if entry.text not in seen:
            seen.add(entry.text)
            reweighted.append(entry)
    if diversify:
        ordered = diversify_select(reweighted, iterations).picks if reweighted else ()
    else:
        ordered = rank_by_appeal(reweighted)
    if top_k is not None:
        ordered = ordered[:top_k]
    names = tuple(
        NameReport(
            display=entry.item.display,
            appeal=entry.appeal,
            readability=entry.item.readability,
            pronounceability=entry.item.pronounceability,
            memorability=entry.item.memorability,
            uniqueness=entry.item.uniqueness,
            syllables=entry.syllable_texts,
            sources=entry.item.sources,
        )
        for entry in ordered
    )
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    return GenerationResponse(
        names=names, candidate_count=len(reweighted), elapsed_ms=elapsed_ms
    )
