"""Ordering, diversification, weight fitting, and rank-quality metrics.

Plain appeal ranking tends to surface many near-duplicates built from the
same syllable, so the diversified selection repeatedly takes the best
remaining name and down-weights everything sharing syllables with it.
Weights can be fitted from pairwise human preferences, and two standard
metrics (Kendall tau, nDCG) measure agreement with reference rankings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Protocol, Sequence, TypeVar

import numpy as np

from .errors import MismatchError, ResourceError, UnlearnableError
from .scoring import AppealWeights


class Rankable(Protocol):
    """What the ordering functions need from a candidate."""

    @property
    def text(self) -> str: ...

    @property
    def syllable_texts(self) -> tuple[str, ...]: ...

    @property
    def appeal(self) -> float: ...


R = TypeVar("R", bound=Rankable)


@dataclass(frozen=True)
class DiversitySelection:
    picks: tuple
    working_appeals: dict[str, float]


@dataclass(frozen=True)
class PairwisePreference:
    winner: tuple[float, float, float, float]
    loser: tuple[float, float, float, float]

    def __post_init__(self):
        for vector in (self.winner, self.loser):
            if len(vector) != 4 or not all(math.isfinite(v) for v in vector):
                raise ValueError("preference vectors must be 4 finite reals")

    def difference(self) -> tuple[float, ...]:
        return tuple(w - l for w, l in zip(self.winner, self.loser))


@dataclass(frozen=True)
class RatedName:
    name: str
    good: int
    fair: int
    bad: int

    def __post_init__(self):
        if min(self.good, self.fair, self.bad) < 0:
            raise ValueError("rating counts must be non-negative")

    @property
    def relevance(self) -> float:
        return self.good + 0.5 * self.fair


def rank_by_appeal(candidates: Sequence[R]) -> list[R]:
    """Descending appeal, ties broken alphabetically."""
    return sorted(candidates, key=lambda c: (-c.appeal, c.text))


def diversify_select(candidates: Sequence[R], iterations: int = 30) -> DiversitySelection:
    """Iteratively pick the best name while penalizing syllable repeats.

    After each pick, every remaining candidate sharing at least one
    syllable text with it has its working appeal multiplied by 1/(m*k),
    m being how many distinct syllable texts they share and k the
    candidate's own syllable count.  Runs until the iteration budget or
    the pool is exhausted.
    """
    if iterations < 1:
        raise ValueError("iterations must be at least 1")
    working = {c.text: c.appeal for c in candidates}
    remaining = list(candidates)
    picks = []
    for _ in range(iterations):
        if not remaining:
            break
        pick = min(remaining, key=lambda c: (-working[c.text], c.text))
        picks.append(pick)
        remaining.remove(pick)
        pick_syllables = set(pick.syllable_texts)
        for candidate in remaining:
            shared = len(set(candidate.syllable_texts) & pick_syllables)
            if shared:
                working[candidate.text] /= shared * len(candidate.syllable_texts)
    return DiversitySelection(picks=tuple(picks), working_appeals=working)


def fit_weights(
    preferences: Sequence[PairwisePreference],
    epochs: int = 200,
    learning_rate: float = 0.05,
    regularization: float = 1e-4,
    seed: int = 0,
) -> AppealWeights:
    """Fit appeal weights to pairwise preferences by hinge-loss descent.

    Minimizes sum(max(0, 1 - w.d)) + reg*|w|^2 over difference vectors
    d = winner - loser with per-sample subgradient steps; sample order is
    reshuffled each epoch from the given seed, so results are
    reproducible.
    """
    if epochs < 1 or learning_rate <= 0 or regularization < 0:
        raise ValueError("hyperparameters out of range")
    if not preferences:
        raise UnlearnableError("no preferences to fit")
    diffs = np.array([p.difference() for p in preferences], dtype=float)
    if not diffs.any():
        raise UnlearnableError("all preference pairs are identical")
    rng = np.random.default_rng(seed)
    w = np.zeros(4)
    shrink = 1.0 - 2.0 * learning_rate * regularization
    for _ in range(epochs):
        for i in rng.permutation(len(diffs)):
            d = diffs[i]
            if w @ d < 1.0:
                w = w * shrink + learning_rate * d
    return AppealWeights(*(float(v) for v in w))


def kendall_tau(rank_a: Sequence[str], rank_b: Sequence[str]) -> float:
    """Tau-a rank correlation between two strict orderings of one item set."""
    if len(rank_a) != len(rank_b):
        raise MismatchError("rankings differ in length")
    if len(set(rank_a)) != len(rank_a) or set(rank_a) != set(rank_b):
        raise MismatchError("rankings are not permutations of the same items")
    n = len(rank_a)
    if n < 2:
        return 1.0
    position = {item: i for i, item in enumerate(rank_b)}
    projected = [position[item] for item in rank_a]
    concordant = discordant = 0
    for i in range(n):
        for j in range(i + 1, n):
            if projected[i] < projected[j]:
                concordant += 1
            else:
                discordant += 1
    return (concordant - discordant) / (n * (n - 1) / 2)


def ndcg(system_order: Sequence[str], ratings: Sequence[RatedName]) -> float:
    """Discounted cumulative gain of the system order vs the ideal order.

    Relevance counts a Good vote as 1 and a Fair vote as 0.5.  Returns 1.0
    when every ordering is equally (ir)relevant, i.e. the ideal gain is 0.
    """
    if len(set(system_order)) != len(system_order):
        raise MismatchError("system order repeats a name")
    by_name: dict[str, RatedName] = {}
    for rated in ratings:
        if rated.name in by_name:
            raise MismatchError(f"duplicate rating for {rated.name!r}")
        by_name[rated.name] = rated
    try:
        relevances = [by_name[name].relevance for name in system_order]
    except KeyError as exc:
        raise MismatchError(f"no rating for {exc.args[0]!r}") from None

    def dcg(values) -> float:
        return sum(v / math.log2(i + 1) for i, v in enumerate(values, start=1))

    ideal = dcg(sorted(relevances, reverse=True))
    if ideal == 0:
        return 1.0
    return dcg(relevances) / ideal


def _parse_floats(fields: Sequence[str], path, lineno: int) -> list[float]:
    values = []
    for field in fields:
        try:
            value = float(field)
        except ValueError:
            raise ResourceError(f"{path}:{lineno}: not a number: {field!r}") from None
        if not math.isfinite(value):
            raise ResourceError(f"{path}:{lineno}: non-finite value")
        values.append(value)
    return values


def load_preferences(path) -> list[PairwisePreference]:
    """Read winner/loser feature vectors, eight tab-separated reals a line."""
    from .resources import _data_lines

    preferences = []
    for lineno, line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 8:
            raise ResourceError(f"{path}:{lineno}: expected 8 columns, got {len(fields)}")
        values = _parse_floats(fields, path, lineno)
        preferences.append(PairwisePreference(tuple(values[:4]), tuple(values[4:])))
    return preferences


def load_ratings(path) -> list[RatedName]:
    """Read name/good/fair/bad rating rows."""
    from .resources import _data_lines

    ratings = []
    for lineno, line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 4:
            raise ResourceError(f"{path}:{lineno}: expected 4 columns, got {len(fields)}")
        counts = []
        for field in fields[1:]:
            try:
                count = int(field)
            except ValueError:
                raise ResourceError(f"{path}:{lineno}: not a count: {field!r}") from None
            if count < 0:
                raise ResourceError(f"{path}:{lineno}: negative count")
            counts.append(count)
        ratings.append(RatedName(fields[0], *counts))
    return ratings


def load_name_list(path) -> list[str]:
    """Read one name per line, blanks and comments skipped."""
    from .resources import _data_lines

    return [line for _, line in _data_lines(path)]
