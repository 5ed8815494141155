"""Loaders for the linguistic resources the generator runs on.

Every resource is a local UTF-8 text file; ``#`` lines are comments.  The
finished :class:`ResourceStore` is immutable and safe to share between
threads.  All text is case-folded to lowercase at load time.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator

from .errors import ResourceError
from .hyphenation import HyphenationPatterns, load_hyphenation_patterns, syllabify


class PosTag(Enum):
    """Coarse part-of-speech tags; only the first four take part in blending."""

    NOUN = "noun"
    VERB = "verb"
    ADJECTIVE = "adjective"
    ADVERB = "adverb"
    OTHER = "other"


# Tie-break order for lexicon lookups and the tags allowed into blending.
BLENDABLE_TAGS = (PosTag.NOUN, PosTag.VERB, PosTag.ADJECTIVE, PosTag.ADVERB)

_TAG_TOKENS = {
    "NOUN": PosTag.NOUN,
    "VERB": PosTag.VERB,
    "ADJ": PosTag.ADJECTIVE,
    "ADV": PosTag.ADVERB,
    "OTHER": PosTag.OTHER,
}


@dataclass(frozen=True)
class StopwordSet:
    words: frozenset[str]

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.words

    def __len__(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class PosLexicon:
    """word -> [(tag, relative frequency)]; frequencies sum to 1 per word."""

    entries: dict[str, tuple[tuple[PosTag, float], ...]]

    def get(self, word: str):
        return self.entries.get(word.lower())


@dataclass(frozen=True)
class SynonymDb:
    entries: dict[tuple[str, PosTag], tuple[str, ...]]

    def lookup(self, word: str, tag: PosTag) -> tuple[str, ...]:
        return self.entries.get((word.lower(), tag), ())


@dataclass(frozen=True)
class SimileDb:
    """Adjective/adverb stem -> nouns it is proverbially compared to."""

    entries: dict[str, tuple[str, ...]]

    def lookup(self, stem: str) -> tuple[str, ...]:
        return self.entries.get(stem.lower(), ())


@dataclass(frozen=True)
class FrequencyDictionary:
    """Known-word list with corpus counts.

    Doubles as the meaningful-word set for memorability and as the corpus
    that normalization statistics are computed over.
    """

    counts: dict[str, int]

    def __contains__(self, word: str) -> bool:
        return word in self.counts

    def __len__(self) -> int:
        return len(self.counts)

    def words(self) -> Iterable[str]:
        return self.counts.keys()


@dataclass(frozen=True)
class NgramTable:
    order: int
    counts: dict[str, int]

    def freq(self, gram: str) -> int:
        return self.counts.get(gram, 0)


@dataclass(frozen=True)
class UsageStore:
    """word -> [(year, usage)] sorted by year, at least two points each."""

    series: dict[str, tuple[tuple[int, float], ...]]

    def get(self, word: str):
        return self.series.get(word.lower())


@dataclass(frozen=True)
class NormStats:
    """Per-feature (min, max) raw ranges over the dictionary corpus."""

    readability: tuple[float, float]
    pronounceability: tuple[float, float]
    memorability: tuple[float, float]
    usage: tuple[float, float]


@dataclass(frozen=True)
class ResourceStore:
    stopwords: StopwordSet
    pos_lexicon: PosLexicon
    synonyms: SynonymDb
    similes: SimileDb
    hyphenation: HyphenationPatterns
    dictionary: FrequencyDictionary
    ngrams: dict[int, NgramTable]
    usage: UsageStore
    norm_stats: NormStats
    checksums: dict[str, str]


def _data_lines(path) -> Iterator[tuple[int, str]]:
    """Yield (line number, stripped content) for non-blank, non-comment lines."""
    try:
        with open(path, encoding="utf-8") as handle:
            for lineno, raw in enumerate(handle, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                yield lineno, line
    except OSError as exc:
        raise ResourceError(f"cannot read {path}: {exc}") from exc


def _columns(path, lineno: int, line: str, expected: int) -> list[str]:
    cols = [c.strip() for c in line.split("\t")]
    if len(cols) != expected or any(not c for c in cols):
        raise ResourceError(
            f"{path} line {lineno}: expected {expected} tab-separated fields"
        )
    return cols


def load_stopwords(path) -> StopwordSet:
    """One word per line."""
    words = {line.lower() for _, line in _data_lines(path)}
    if not words:
        raise ResourceError(f"{path}: stopword list is empty")
    return StopwordSet(frozenset(words))


def load_pos_lexicon(path) -> PosLexicon:
    """Rows of ``word<TAB>tag<TAB>count``; counts become relative frequencies."""
    raw: dict[str, Counter] = {}
    for lineno, line in _data_lines(path):
        word, tag_token, count_text = _columns(path, lineno, line, 3)
        tag = _TAG_TOKENS.get(tag_token.upper())
        if tag is None:
            raise ResourceError(f"{path} line {lineno}: unknown tag {tag_token!r}")
        try:
            count = int(count_text)
        except ValueError:
            raise ResourceError(
                f"{path} line {lineno}: count {count_text!r} is not an integer"
            ) from None
        if count < 0:
            raise ResourceError(f"{path} line {lineno}: negative count")
        raw.setdefault(word.lower(), Counter())[tag] += count

    entries = {}
    for word, tags in raw.items():
        total = sum(tags.values())
        if total == 0:
            raise ResourceError(f"{path}: word {word!r} has zero total count")
        entries[word] = tuple((tag, count / total) for tag, count in tags.items())
    return PosLexicon(entries)


def load_synonyms(path) -> SynonymDb:
    """Rows of ``word<TAB>tag<TAB>synonym``; self-synonyms are dropped."""
    entries: dict[tuple[str, PosTag], list[str]] = {}
    for lineno, line in _data_lines(path):
        word, tag_token, synonym = _columns(path, lineno, line, 3)
        tag = _TAG_TOKENS.get(tag_token.upper())
        if tag is None:
            raise ResourceError(f"{path} line {lineno}: unknown tag {tag_token!r}")
        word = word.lower()
        synonym = synonym.lower()
        if " " in synonym:
            raise ResourceError(f"{path} line {lineno}: synonym must be one token")
        if synonym == word:
            continue
        bucket = entries.setdefault((word, tag), [])
        if synonym not in bucket:
            bucket.append(synonym)
    return SynonymDb({key: tuple(vals) for key, vals in entries.items()})


def load_similes(path) -> SimileDb:
    """Rows of ``word<TAB>metaphor``."""
    entries: dict[str, list[str]] = {}
    for lineno, line in _data_lines(path):
        word, metaphor = _columns(path, lineno, line, 2)
        word = word.lower()
        metaphor = metaphor.lower()
        if " " in metaphor:
            raise ResourceError(f"{path} line {lineno}: metaphor must be one token")
        bucket = entries.setdefault(word, [])
        if metaphor not in bucket:
            bucket.append(metaphor)
    return SimileDb({key: tuple(vals) for key, vals in entries.items()})


def load_frequency_dictionary(path) -> FrequencyDictionary:
    """Rows of ``word<TAB>count``; non-alphabetic words are dropped."""
    counts: dict[str, int] = {}
    for lineno, line in _data_lines(path):
        word, count_text = _columns(path, lineno, line, 2)
        try:
            count = int(count_text)
        except ValueError:
            raise ResourceError(
                f"{path} line {lineno}: count {count_text!r} is not an integer"
            ) from None
        if count <= 0:
            raise ResourceError(f"{path} line {lineno}: count must be positive")
        word = word.lower()
        if not word.isascii() or not word.isalpha():
            continue
        counts[word] = counts.get(word, 0) + count
    if not counts:
        raise ResourceError(f"{path}: dictionary is empty")
    return FrequencyDictionary(counts)


def load_usage_series(path) -> UsageStore:
    """Rows of ``word<TAB>year<TAB>value``, grouped and year-sorted per word.

    Series with a single usable point are dropped (a lone year carries no
    trend information).
    """
    grouped: dict[str, dict[int, float]] = {}
    for lineno, line in _data_lines(path):
        word, year_text, value_text = _columns(path, lineno, line, 3)
        try:
            year = int(year_text)
            value = float(value_text)
        except ValueError:
            raise ResourceError(f"{path} line {lineno}: bad year or value") from None
        if value < 0:
            raise ResourceError(f"{path} line {lineno}: usage must be >= 0")
        word = word.lower()
        points = grouped.setdefault(word, {})
        if year in points:
            raise ResourceError(f"{path} line {lineno}: duplicate year for {word!r}")
        points[year] = value
    series = {
        word: tuple(sorted(points.items()))
        for word, points in grouped.items()
        if len(points) >= 2
    }
    return UsageStore(series)


def build_ngram_table(dictionary: FrequencyDictionary, order: int) -> NgramTable:
    """Count n-grams across dictionary word types (each word counted once)."""
    if order not in (2, 3, 4):
        raise ValueError("order must be 2, 3, or 4")
    counts: Counter = Counter()
    for word in dictionary.words():
        for start in range(len(word) - order + 1):
            counts[word[start : start + order]] += 1
    return NgramTable(order=order, counts=dict(counts))


def feature_stats(
    dictionary: FrequencyDictionary,
    ngrams: dict[int, NgramTable],
    usage: UsageStore,
    patterns: HyphenationPatterns,
) -> NormStats:
    """Raw feature ranges over the dictionary, for [0, 1] normalization.

    Readability bounds follow analytically from the syllable-count extremes;
    memorability is already a ratio in [0, 1] and needs no measurement.  A
    feature with no spread makes normalization meaningless, so that is a
    load error rather than a NaN factory.
    """
    from . import scoring  # deferred: scoring consumes the types defined here

    syllable_counts = [len(syllabify(word, patterns)) for word in dictionary.words()]
    pron = [scoring.pronounceability_raw(word, ngrams) for word in dictionary.words()
            if len(word) >= 2]
    usage_values = []
    for word in dictionary.words():
        value, found = scoring.usage_weighted(word, usage)
        if found:
            usage_values.append(value)

    def spread(values, feature: str) -> tuple[float, float]:
        if not values:
            raise ResourceError(f"no {feature} observations in the dictionary")
        lo, hi = min(values), max(values)
        if not lo < hi:
            raise ResourceError(f"degenerate corpus: {feature} range is a point")
        return (lo, hi)

    count_lo, count_hi = spread(syllable_counts, "syllable-count")
    readability = (
        scoring.readability_from_syllables(count_hi),
        scoring.readability_from_syllables(count_lo),
    )
    return NormStats(
        readability=readability,
        pronounceability=spread(pron, "pronounceability"),
        memorability=(0.0, 1.0),
        usage=spread(usage_values, "usage"),
    )


# Standard file names inside a resource directory.
RESOURCE_FILES = {
    "stopwords": "stopwords.txt",
    "pos_lexicon": "pos_lexicon.tsv",
    "synonyms": "synonyms.tsv",
    "similes": "similes.tsv",
    "hyphenation": "hyphenation.pat",
    "dictionary": "dictionary.tsv",
    "usage": "usage.tsv",
}


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def load_resource_dir(directory) -> ResourceStore:
    """Load a complete resource set from a directory of standard file names."""
    root = Path(directory)
    paths = {key: root / name for key, name in RESOURCE_FILES.items()}
    missing = [str(p) for p in paths.values() if not p.is_file()]
    if missing:
        raise ResourceError(f"missing resource files: {', '.join(missing)}")

    dictionary = load_frequency_dictionary(paths["dictionary"])
    patterns = load_hyphenation_patterns(paths["hyphenation"])
    ngrams = {order: build_ngram_table(dictionary, order) for order in (2, 3, 4)}
    usage = load_usage_series(paths["usage"])
    return ResourceStore(
        stopwords=load_stopwords(paths["stopwords"]),
        pos_lexicon=load_pos_lexicon(paths["pos_lexicon"]),
        synonyms=load_synonyms(paths["synonyms"]),
        similes=load_similes(paths["similes"]),
        hyphenation=patterns,
        dictionary=dictionary,
        ngrams=ngrams,
        usage=usage,
        norm_stats=feature_stats(dictionary, ngrams, usage, patterns),
        checksums={name.name: _sha256(name) for name in paths.values()},
    )
