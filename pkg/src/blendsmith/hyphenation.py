"""Knuth-Liang pattern hyphenation, used here as a syllable splitter.

Patterns are the classic TeX kind: lowercase letters with interleaved
digits and optional ``.`` anchors, e.g. ``.ap4`` or ``1ca``.  Digits score
the inter-letter position they sit on; after taking the maximum score over
every matching pattern, odd positions become break points.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ResourceError

_PATTERN_RE = re.compile(r"^\.?\d?(?:[a-z]\d?)+\.?$")


@dataclass(frozen=True)
class HyphenationPatterns:
    """Parsed pattern set plus the minimum fragment lengths at word edges."""

    points: dict[str, tuple[int, ...]]
    left_min: int = 2
    right_min: int = 2
    max_len: int = field(init=False, default=0)

    def __post_init__(self):
        if self.left_min < 1 or self.right_min < 1:
            raise ResourceError("left_min and right_min must be >= 1")
        longest = max((len(s) for s in self.points), default=0)
        object.__setattr__(self, "max_len", longest)


def decompose_pattern(pattern: str) -> tuple[str, tuple[int, ...]]:
    """Split a pattern into its letter skeleton and per-position weights.

    The weight tuple has ``len(skeleton) + 1`` entries: one slot before each
    skeleton character and one after the last.
    """
    if not _PATTERN_RE.match(pattern):
        raise ResourceError(f"malformed hyphenation pattern {pattern!r}")
    skeleton = re.sub(r"\d", "", pattern)
    if not any(c.isdigit() for c in pattern):
        raise ResourceError(f"hyphenation pattern {pattern!r} has no digits")
    weights = [0] * (len(skeleton) + 1)
    slot = 0
    for ch in pattern:
        if ch.isdigit():
            weights[slot] = int(ch)
        else:
            slot += 1
    return skeleton, tuple(weights)


def parse_pattern_lines(lines) -> HyphenationPatterns:
    """Build a pattern set from the lines of a Liang pattern file.

    ``LEFTMIN=k`` / ``RIGHTMIN=k`` header lines set the edge minimums
    (default 2); ``#`` lines are comments.
    """
    left_min, right_min = 2, 2
    points: dict[str, tuple[int, ...]] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        upper = line.upper()
        if upper.startswith("LEFTMIN=") or upper.startswith("RIGHTMIN="):
            key, _, value = upper.partition("=")
            try:
                amount = int(value)
            except ValueError:
                raise ResourceError(f"line {lineno}: bad header {line!r}") from None
            if amount < 1:
                raise ResourceError(f"line {lineno}: {key} must be >= 1")
            if key == "LEFTMIN":
                left_min = amount
            else:
                right_min = amount
            continue
        for token in line.split():
            try:
                skeleton, weights = decompose_pattern(token.lower())
            except ResourceError as exc:
                raise ResourceError(f"line {lineno}: {exc}") from None
            if skeleton in points:
                weights = tuple(
                    max(a, b) for a, b in zip(weights, points[skeleton])
                )
            points[skeleton] = weights
    return HyphenationPatterns(points=points, left_min=left_min, right_min=right_min)


def load_hyphenation_patterns(path) -> HyphenationPatterns:
    """Read and parse a Liang pattern file."""
    try:
        with open(path, encoding="utf-8") as handle:
            return parse_pattern_lines(handle)
    except OSError as exc:
        raise ResourceError(f"cannot read hyphenation patterns: {exc}") from exc


def syllabify(word: str, patterns: HyphenationPatterns) -> list[str]:
    """Split a word into syllables at odd-scored pattern positions.

    Words too short to hold ``left_min + right_min`` characters come back
    whole.  Concatenating the result always reproduces the input.
    """
    word = word.lower()
    if len(word) < patterns.left_min + patterns.right_min:
        return [word]

    padded = "." + word + "."
    scores = [0] * (len(padded) + 1)
    table = patterns.points
    longest = min(patterns.max_len, len(padded))
    for start in range(len(padded)):
        for length in range(1, longest + 1):
            weights = table.get(padded[start : start + length])
            if weights is None:
                continue
            for offset, weight in enumerate(weights):
                if weight > scores[start + offset]:
                    scores[start + offset] = weight

    pieces = [""]
    for pos in range(len(word)):
        pieces[-1] += word[pos]
        gap = pos + 1  # break between word[pos] and word[pos + 1]
        if gap < patterns.left_min or gap > len(word) - patterns.right_min:
            continue
        if scores[gap + 1] % 2 == 1:
            pieces.append("")
    return pieces
