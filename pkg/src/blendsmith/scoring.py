"""The four feature scores of a candidate name and their combination.

Readability is the single-word Flesch reading-ease line, pronounceability a
length-weighted character n-gram average, memorability the best fraction of
characters coverable by known words, and uniqueness the inverse of
recency-weighted historical usage.  Raw values are min-max normalized over
the dictionary corpus and combined linearly into one appeal value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import TooShortError
from .hyphenation import HyphenationPatterns, syllabify
from .pipeline import RawCandidate
from .resources import (
    FrequencyDictionary,
    NgramTable,
    NormStats,
    ResourceStore,
    UsageStore,
)

# Flesch reading-ease for a single word reduces to a line in syllable count.
READING_EASE_BASE = 205.82
READING_EASE_PER_SYLLABLE = 84.6

# Substring scores of length 2, 3, 4 weighted proportionally to their length:
# longer grams are scarcer and carry more signal.
NGRAM_ORDERS = (2, 3, 4)
_ORDER_WEIGHT_TOTAL = sum(NGRAM_ORDERS)

# A substring must be at least this long to count as a meaningful word.
MIN_MEANINGFUL_LENGTH = 3


@dataclass(frozen=True)
class AppealWeights:
    """Linear weights over the four normalized scores."""

    readability: float = 2.18
    pronounceability: float = 1.63
    memorability: float = 0.91
    uniqueness: float = 1.05

    def __post_init__(self):
        for value in self.as_tuple():
            if not math.isfinite(value):
                raise ValueError("appeal weights must be finite")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (
            self.readability,
            self.pronounceability,
            self.memorability,
            self.uniqueness,
        )


DEFAULT_WEIGHTS = AppealWeights()


@dataclass(frozen=True)
class FeatureScores:
    readability_raw: float
    pronounceability_raw: float
    memorability: float
    usage_weighted: Optional[float]
    readability: float
    pronounceability: float
    uniqueness: float

    def normalized(self) -> tuple[float, float, float, float]:
        return (
            self.readability,
            self.pronounceability,
            self.memorability,
            self.uniqueness,
        )


@dataclass(frozen=True)
class Candidate:
    raw: RawCandidate
    scores: FeatureScores
    appeal: float

    @property
    def text(self) -> str:
        return self.raw.text

    @property
    def display(self) -> str:
        return self.raw.display

    @property
    def syllable_texts(self) -> tuple[str, ...]:
        return self.raw.parts


def readability_from_syllables(count: float) -> float:
    return READING_EASE_BASE - READING_EASE_PER_SYLLABLE * count


def readability_raw(name: str, patterns: HyphenationPatterns) -> float:
    """Reading-ease of a single word; negative values are fine pre-normalization."""
    return readability_from_syllables(len(syllabify(name, patterns)))


def substring_score(name: str, table: NgramTable) -> float:
    """Mean dictionary frequency of the name's length-l substrings.

    Zero when the name is shorter than the n-gram order; unseen substrings
    count as frequency zero.
    """
    windows = len(name) - table.order + 1
    if windows < 1:
        return 0.0
    total = sum(table.freq(name[i : i + table.order]) for i in range(windows))
    return total / windows


def pronounceability_raw(name: str, ngrams: dict[int, NgramTable]) -> float:
    """Length-weighted combination of the order-2, 3, 4 substring scores."""
    if len(name) < 2:
        raise TooShortError(f"cannot score pronounceability of {name!r}")
    return sum(
        (order / _ORDER_WEIGHT_TOTAL) * substring_score(name, ngrams[order])
        for order in NGRAM_ORDERS
    )


def memorability(name: str, dictionary: FrequencyDictionary) -> float:
    """Best fraction of characters covered by disjoint, in-order known words.

    Dynamic program over prefix lengths: either the character before
    position i stays uncovered, or some dictionary word of length >= 3 ends
    exactly at i.
    """
    n = len(name)
    if n == 0:
        return 0.0
    best = [0] * (n + 1)
    for i in range(1, n + 1):
        best[i] = best[i - 1]
        for j in range(i - MIN_MEANINGFUL_LENGTH, -1, -1):
            if name[j:i] in dictionary:
                covered = best[j] + (i - j)
                if covered > best[i]:
                    best[i] = covered
    return best[n] / n


def usage_weighted(name: str, usage: UsageStore) -> tuple[float, bool]:
    """Recency-weighted mean usage of a word's yearly series.

    Yearly values are weighted by their distance from the series start, so
    recent usage dominates.  Returns (0.0, False) when no usable series
    exists, including the degenerate single-year case.
    """
    series = usage.get(name)
    if series is None or len(series) < 2:
        return (0.0, False)
    first_year = series[0][0]
    denominator = sum(year - first_year for year, _ in series)
    if denominator == 0:
        return (0.0, False)
    numerator = sum(value * (year - first_year) for year, value in series)
    return (numerator / denominator, True)


def normalize(raw: float, stats: tuple[float, float]) -> float:
    """Min-max normalize into [0, 1], clamping values outside the range."""
    lo, hi = stats
    scaled = (raw - lo) / (hi - lo)
    return min(1.0, max(0.0, scaled))


def uniqueness(name: str, usage: UsageStore, stats: NormStats) -> float:
    """1 for never-used names; otherwise inverted normalized weighted usage."""
    value, found = usage_weighted(name, usage)
    if not found:
        return 1.0
    return 1.0 - normalize(value, stats.usage)


def appeal(scores: FeatureScores, weights: AppealWeights) -> float:
    return sum(w * s for w, s in zip(weights.as_tuple(), scores.normalized()))


def score_features(name: str, store: ResourceStore) -> FeatureScores:
    """Compute all four raw and normalized scores for one name."""
    stats = store.norm_stats
    r_raw = readability_raw(name, store.hyphenation)
    p_raw = pronounceability_raw(name, store.ngrams)
    memo = memorability(name, store.dictionary)
    value, found = usage_weighted(name, store.usage)
    return FeatureScores(
        readability_raw=r_raw,
        pronounceability_raw=p_raw,
        memorability=memo,
        usage_weighted=value if found else None,
        readability=normalize(r_raw, stats.readability),
        pronounceability=normalize(p_raw, stats.pronounceability),
        uniqueness=1.0 - normalize(value, stats.usage) if found else 1.0,
    )


def score_candidates(
    candidates: Sequence[RawCandidate],
    store: ResourceStore,
    weights: AppealWeights = DEFAULT_WEIGHTS,
) -> list[Candidate]:
    """Attach feature scores and appeal to each candidate, order preserved."""
    scored = []
    for raw in candidates:
        scores = score_features(raw.text, store)
        scored.append(Candidate(raw=raw, scores=scores, appeal=appeal(scores, weights)))
    return scored
