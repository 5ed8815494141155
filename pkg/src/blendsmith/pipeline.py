"""From description text to blended name candidates.

The pipeline tokenizes the description, drops stopwords, tags the surviving
roots with parts of speech, widens the word set with synonyms and metaphors,
splits every word into syllables, and finally enumerates two- and three-way
syllable blends constrained by a part-of-speech pairing table.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

from .errors import EmptyDescriptionError, NoCandidatesError, NoRootsError
from .hyphenation import HyphenationPatterns, syllabify
from .resources import (
    BLENDABLE_TAGS,
    PosLexicon,
    PosTag,
    SimileDb,
    StopwordSet,
    SynonymDb,
)

MAX_NAME_LENGTH = 15
BLEND_ARITIES = (2, 3)

# Tie-break order for tagging; unlisted (Other) sorts last.
_TAG_PRIORITY = {tag: i for i, tag in enumerate(BLENDABLE_TAGS)}

_WORD_RE = re.compile(r"[a-z]+")


class WordOrigin(Enum):
    ROOT = "root"
    SYNONYM = "synonym"
    METAPHOR = "metaphor"


@dataclass(frozen=True)
class TaggedWord:
    surface: str
    tag: PosTag
    origin: WordOrigin
    root: str


@dataclass(frozen=True)
class SyllableUnit:
    """One pool entry: a single syllable or a same-word run of syllables.

    `parts` holds the individual syllables the unit spans; `index` is the
    position of the first one within the parent word.
    """

    text: str
    tag: PosTag
    parent: TaggedWord
    index: int
    parts: tuple[str, ...]


# Empirical co-occurrence percentages of part-of-speech pairs in real
# blended brand names; pairs below the threshold are disallowed.
PAIR_PREVALENCE = {
    (PosTag.NOUN, PosTag.NOUN): 36.36,
    (PosTag.NOUN, PosTag.VERB): 8.02,
    (PosTag.NOUN, PosTag.ADJECTIVE): 40.10,
    (PosTag.NOUN, PosTag.ADVERB): 4.81,
    (PosTag.VERB, PosTag.VERB): 0.00,
    (PosTag.VERB, PosTag.ADJECTIVE): 0.53,
    (PosTag.VERB, PosTag.ADVERB): 3.7,
    (PosTag.ADJECTIVE, PosTag.ADJECTIVE): 3.28,
    (PosTag.ADJECTIVE, PosTag.ADVERB): 3.2,
    (PosTag.ADVERB, PosTag.ADVERB): 0.00,
}

DEFAULT_RULE_THRESHOLD = 1.0


def _pair(a: PosTag, b: PosTag) -> tuple[PosTag, PosTag]:
    if _TAG_PRIORITY.get(a, len(_TAG_PRIORITY)) <= _TAG_PRIORITY.get(b, len(_TAG_PRIORITY)):
        return (a, b)
    return (b, a)


@dataclass(frozen=True)
class RuleTable:
    """Unordered tag-pair prevalences with an inclusion threshold."""

    rows: dict[tuple[PosTag, PosTag], float] = field(
        default_factory=lambda: dict(PAIR_PREVALENCE)
    )
    threshold: float = DEFAULT_RULE_THRESHOLD

    def __post_init__(self):
        for pair, percentage in self.rows.items():
            if percentage < 0:
                raise ValueError(f"negative prevalence for {pair}")

    def percentage(self, a: PosTag, b: PosTag) -> float:
        return self.rows.get(_pair(a, b), 0.0)

    def allows(self, a: PosTag, b: PosTag) -> bool:
        return self.percentage(a, b) >= self.threshold


@dataclass(frozen=True)
class RawCandidate:
    """An ordered arrangement of 2 or 3 pool units forming one name."""

    units: tuple[SyllableUnit, ...]

    @property
    def text(self) -> str:
        return "".join(unit.text for unit in self.units)

    @property
    def parts(self) -> tuple[str, ...]:
        """Individual syllables in order, composites flattened."""
        return tuple(part for unit in self.units for part in unit.parts)

    @property
    def display(self) -> str:
        return "".join(part.capitalize() for part in self.parts)

    @property
    def sources(self) -> tuple[str, ...]:
        """Distinct root words the units trace back to, first-use order."""
        seen = []
        for unit in self.units:
            if unit.parent.root not in seen:
                seen.append(unit.parent.root)
        return tuple(seen)


def tokenize(description: str) -> list[str]:
    """Lowercase alphabetic runs of the description, in order."""
    tokens = _WORD_RE.findall(description.lower())
    if not tokens:
        raise EmptyDescriptionError("description contains no words")
    return tokens


def extract_roots(tokens: Sequence[str], stopwords: StopwordSet) -> list[str]:
    """Drop stopwords, keeping order and duplicates."""
    roots = [token for token in tokens if token not in stopwords]
    if not roots:
        raise NoRootsError("every word of the description is a stopword")
    return roots


def _suffix_tag(word: str) -> PosTag:
    if word.endswith("ly"):
        return PosTag.ADVERB
    if word.endswith(("ing", "ate")):
        return PosTag.VERB
    if word.endswith(("ous", "ful", "ive")):
        return PosTag.ADJECTIVE
    return PosTag.NOUN


def _lexicon_tag(word: str, lexicon: PosLexicon) -> PosTag:
    entries = lexicon.get(word)
    if not entries:
        return _suffix_tag(word)
    return max(
        entries,
        key=lambda e: (e[1], -_TAG_PRIORITY.get(e[0], len(_TAG_PRIORITY))),
    )[0]


def tag_pos(roots: Sequence[str], lexicon: PosLexicon) -> list[TaggedWord]:
    """Tag each root with its dominant part of speech.

    Lexicon ties break toward the earlier tag in noun, verb, adjective,
    adverb order; unknown words fall back to suffix shape.  Words whose
    dominant tag is outside the blendable four are dropped.
    """
    tagged = []
    seen = set()
    for root in roots:
        tag = _lexicon_tag(root, lexicon)
        if tag not in _TAG_PRIORITY:
            continue
        key = (root, tag)
        if key in seen:
            continue
        seen.add(key)
        tagged.append(TaggedWord(surface=root, tag=tag, origin=WordOrigin.ROOT, root=root))
    return tagged


def _metaphor_stem(word: str) -> Optional[str]:
    if word.endswith("ly") and len(word) > 3:
        return word[: -len("ly")]
    return None


def expand_related(
    roots: Sequence[TaggedWord],
    synonyms: SynonymDb,
    similes: SimileDb,
    max_per_root: int = 5,
) -> list[TaggedWord]:
    """Roots, then synonyms, then metaphors, each inheriting the root's tag.

    Metaphors come from the simile table and apply to adjective and adverb
    roots only; adverbs are looked up through their -ly-stripped stem too,
    so "wisely" reaches the entry for "wise".
    """
    if max_per_root < 0:
        raise ValueError("max_per_root must be non-negative")
    related: list[TaggedWord] = []
    seen: set[tuple[str, PosTag]] = set()

    def add(word: TaggedWord):
        key = (word.surface, word.tag)
        if key not in seen:
            seen.add(key)
            related.append(word)

    for root in roots:
        add(root)
    for root in roots:
        for synonym in synonyms.lookup(root.surface, root.tag)[:max_per_root]:
            add(TaggedWord(synonym, root.tag, WordOrigin.SYNONYM, root.surface))
    for root in roots:
        if root.tag not in (PosTag.ADJECTIVE, PosTag.ADVERB):
            continue
        metaphors = similes.lookup(root.surface)
        if not metaphors:
            stem = _metaphor_stem(root.surface)
            if stem:
                metaphors = similes.lookup(stem)
        for metaphor in metaphors:
            add(TaggedWord(metaphor, root.tag, WordOrigin.METAPHOR, root.surface))
    return related


def build_syllable_pool(
    words: Sequence[TaggedWord], patterns: HyphenationPatterns
) -> list[SyllableUnit]:
    """Syllabify every word into pool units tagged like their parent.

    Besides single syllables, each word contributes its multi-syllable
    prefixes and suffixes as composite units, so a run of one word's
    syllables can enter a blend as a single constituent.  Units are
    deduplicated on (text, tag), first occurrence kept.
    """
    pool: list[SyllableUnit] = []
    seen: set[tuple[str, PosTag]] = set()

    def add(unit: SyllableUnit):
        key = (unit.text, unit.tag)
        if key not in seen:
            seen.add(key)
            pool.append(unit)

    for word in words:
        parts = syllabify(word.surface, patterns)
        n = len(parts)
        for i, part in enumerate(parts):
            add(SyllableUnit(part, word.tag, word, i, (part,)))
        for k in range(2, n + 1):
            add(SyllableUnit("".join(parts[:k]), word.tag, word, 0, tuple(parts[:k])))
        for k in range(2, n):
            add(
                SyllableUnit(
                    "".join(parts[n - k :]), word.tag, word, n - k, tuple(parts[n - k :])
                )
            )
    return pool


def allowed_rules(table: RuleTable) -> set[tuple[PosTag, PosTag]]:
    """The unordered tag pairs whose prevalence clears the threshold."""
    return {pair for pair, pct in table.rows.items() if pct >= table.threshold}


def _admissible(units: tuple[SyllableUnit, ...], table: RuleTable) -> bool:
    parents = {unit.parent.surface for unit in units}
    if len(parents) != len(units):
        return False
    if sum(len(unit.text) for unit in units) > MAX_NAME_LENGTH:
        return False
    return all(
        table.allows(a.tag, b.tag) for a, b in itertools.combinations(units, 2)
    )


def generate_blends(
    pool: Sequence[SyllableUnit],
    rules: RuleTable,
    arities: Iterable[int] = BLEND_ARITIES,
    cap: Optional[int] = None,
) -> list[RawCandidate]:
    """Every admissible ordered arrangement of 2 or 3 pool units.

    Admissible means: all unordered tag pairs allowed, no two units from
    the same parent word, and a total length within the name cap.
    Duplicate texts keep their first enumeration; the result is sorted by
    text.  `cap` bounds how many candidates the caller keeps once scored;
    enumeration itself is always exhaustive so the bound never biases
    which names exist.
    """
    if cap is not None and cap < 1:
        raise ValueError("cap must be at least 1")
    sizes = sorted(set(arities))
    if any(size not in BLEND_ARITIES for size in sizes):
        raise ValueError(f"arities must be among {BLEND_ARITIES}")
    by_text: dict[str, RawCandidate] = {}
    for size in sizes:
        for units in itertools.permutations(pool, size):
            if not _admissible(units, rules):
                continue
            candidate = RawCandidate(units=units)
            if candidate.text not in by_text:
                by_text[candidate.text] = candidate
    if not by_text:
        raise NoCandidatesError("no syllable combination passes the blending rules")
    return [by_text[text] for text in sorted(by_text)]
