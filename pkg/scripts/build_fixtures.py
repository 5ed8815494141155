#!/usr/bin/env python3
"""Regenerate the bundled resource files under fixtures/resources.

Everything is emitted deterministically from the literals below, so the
checked-in files can be rebuilt byte-for-byte.  The hyphenation file mixes
two layers: generic vowel-consonant-vowel patterns (digit 1), and per-word
anchored patterns that pin the exact split of every word the test corpus
relies on (digit 9 at wanted breaks, 8 everywhere else, which outranks the
generic layer).
"""

import argparse
from pathlib import Path

VOWELS = "aeiou"
CONSONANTS = "bcdfghjklmnpqrstvwxyz"

# word -> break gaps (character positions); empty tuple pins the word whole
ANCHORED_SPLITS = {
    "application": (3, 5, 7),   # app-li-ca-tion
    "break": (),
    "budget": (3,),             # bud-get
    "cheetah": (4,),            # chee-tah
    "cleave": (),
    "cost": (),
    "creating": (3, 5),         # cre-at-ing
    "expense": (2,),            # ex-pense
    "feather": (3,),            # fea-ther
    "fox": (),
    "outlay": (3,),             # out-lay
    "owl": (),
    "ox": (),
    "split": (),
    "tear": (),
    "wise": (),
    "wisely": (4,),             # wise-ly
}

LEXICON = [
    ("application", "NOUN", 14),
    ("book", "NOUN", 9),
    ("book", "VERB", 2),
    ("break", "VERB", 6),
    ("break", "NOUN", 2),
    ("budget", "NOUN", 5),
    ("budget", "VERB", 1),
    ("cleave", "VERB", 2),
    ("cost", "NOUN", 5),
    ("cost", "VERB", 3),
    ("creating", "VERB", 11),
    ("expense", "NOUN", 7),
    ("face", "NOUN", 6),
    ("face", "VERB", 2),
    ("fast", "ADJ", 3),
    ("fast", "ADV", 3),
    ("hmm", "OTHER", 5),
    ("light", "NOUN", 5),
    ("light", "ADJ", 7),
    ("make", "VERB", 7),
    ("outlay", "NOUN", 2),
    ("owl", "NOUN", 4),
    ("quick", "ADJ", 4),
    ("run", "VERB", 8),
    ("run", "NOUN", 3),
    ("split", "VERB", 9),
    ("split", "NOUN", 1),
    ("strong", "ADJ", 5),
    ("tear", "VERB", 3),
    ("tear", "NOUN", 3),
    ("um", "OTHER", 2),
    ("wise", "ADJ", 6),
    ("wisely", "ADV", 5),
]

SYNONYMS = [
    ("split", "VERB", "break"),
    ("split", "VERB", "tear"),
    ("split", "VERB", "cleave"),
    ("expense", "NOUN", "cost"),
    ("expense", "NOUN", "outlay"),
    ("expense", "NOUN", "budget"),
    ("quick", "ADJ", "fast"),
    ("light", "ADJ", "bright"),
]

SIMILES = [
    ("wise", "owl"),
    ("light", "feather"),
    ("fast", "cheetah"),
    ("strong", "ox"),
    ("quick", "fox"),
]

STOPWORDS = [
    "a", "an", "and", "are", "as", "at", "be", "by", "for", "from",
    "i", "in", "is", "it", "not", "of", "on", "or", "our", "that",
    "the", "this", "to", "we", "with", "you", "your",
]

# words whose character n-grams, syllable counts, and usage histories
# anchor the normalization corpus; face and book also back the
# memorability checks
DICTIONARY_WORDS = [
    "face", "book", "split", "wise", "break", "tear", "cleave", "cost",
    "owl", "out", "lay", "bud", "get", "light", "feather", "quick",
    "fast", "strong", "run", "make", "time", "year", "people", "way",
    "day", "man", "thing", "woman", "life", "child", "world", "school",
    "state", "family", "student", "group", "country", "problem", "hand",
    "part", "place", "case", "week", "company", "system", "program",
    "question", "work", "government", "number", "night", "point",
    "home", "water", "room", "mother", "area", "money", "story", "fact",
    "month", "right", "study", "job", "word", "business", "issue",
    "side", "kind", "head", "house", "service", "friend", "father",
    "power", "hour", "game", "line", "end", "member", "law", "car",
    "city", "community", "name", "team", "minute", "idea", "body",
    "information", "back", "parent", "level", "office", "door",
    "health", "person", "art", "war", "history", "party", "result",
    "change", "morning", "reason", "research", "moment", "air",
    "teacher", "force", "education",
]

# words with a usage history; (base, slope) make a small linear series
USAGE_SERIES = [
    ("face", 0.0110, 0.0004),
    ("book", 0.0092, -0.0002),
    ("time", 0.0300, 0.0001),
    ("year", 0.0240, 0.0003),
    ("people", 0.0210, 0.0002),
    ("way", 0.0180, 0.0000),
    ("day", 0.0170, -0.0001),
    ("world", 0.0120, 0.0002),
    ("life", 0.0150, 0.0001),
    ("work", 0.0140, 0.0003),
    ("school", 0.0080, -0.0003),
    ("family", 0.0090, 0.0002),
    ("water", 0.0070, 0.0000),
    ("money", 0.0060, 0.0004),
    ("story", 0.0050, 0.0001),
    ("light", 0.0055, -0.0002),
    ("run", 0.0065, 0.0001),
    ("split", 0.0018, 0.0002),
    ("break", 0.0048, 0.0003),
    ("cost", 0.0052, 0.0004),
    ("wise", 0.0012, -0.0001),
    ("tear", 0.0016, 0.0000),
    ("power", 0.0075, 0.0001),
    ("health", 0.0085, 0.0005),
    ("game", 0.0068, 0.0004),
]

USAGE_YEARS = (2016, 2017, 2018, 2019, 2020, 2021, 2022, 2023)


def anchored_pattern(word: str, breaks) -> str:
    chunks = ["."]
    for i, letter in enumerate(word):
        if i:
            chunks.append("9" if i in breaks else "8")
        chunks.append(letter)
    chunks.append(".")
    return "".join(chunks)


def hyphenation_lines() -> list:
    lines = [
        "LEFTMIN=2",
        "RIGHTMIN=2",
        "# anchored word patterns (digit 9 = break, 8 = no break)",
    ]
    for word in sorted(ANCHORED_SPLITS):
        lines.append(anchored_pattern(word, ANCHORED_SPLITS[word]))
    lines.append("# generic vowel-consonant-vowel breaks")
    for v1 in VOWELS:
        for c in CONSONANTS:
            for v2 in VOWELS:
                lines.append(f"{v1}1{c}{v2}")
    return lines


def dictionary_rows() -> list:
    rows = []
    for i, word in enumerate(DICTIONARY_WORDS):
        if word == "face":
            count = 50
        elif word == "book":
            count = 40
        else:
            count = 9000 // (i + 3) + 7
        rows.append((word, count))
    return rows


def usage_rows() -> list:
    rows = []
    for word, base, slope in USAGE_SERIES:
        for k, year in enumerate(USAGE_YEARS):
            rows.append((word, year, round(base + slope * k, 6)))
    return rows


def write_lines(path: Path, header: str, lines) -> None:
    body = "\n".join([f"# {header}"] + [str(line) for line in lines]) + "\n"
    path.write_text(body, encoding="utf-8")
    print(f"wrote {path} ({len(lines)} lines)")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    default_out = Path(__file__).resolve().parents[1] / "fixtures" / "resources"
    parser.add_argument("--out", type=Path, default=default_out)
    args = parser.parse_args()
    out: Path = args.out
    out.mkdir(parents=True, exist_ok=True)

    write_lines(out / "stopwords.txt", "stopwords, one per line", STOPWORDS)
    write_lines(
        out / "pos_lexicon.tsv",
        "word<TAB>tag<TAB>count",
        [f"{w}\t{t}\t{c}" for w, t, c in LEXICON],
    )
    write_lines(
        out / "synonyms.tsv",
        "word<TAB>tag<TAB>synonym",
        [f"{w}\t{t}\t{s}" for w, t, s in SYNONYMS],
    )
    write_lines(
        out / "similes.tsv",
        "word<TAB>metaphor",
        [f"{w}\t{m}" for w, m in SIMILES],
    )
    write_lines(out / "hyphenation.pat", "Liang patterns", hyphenation_lines())
    write_lines(
        out / "dictionary.tsv",
        "word<TAB>count",
        [f"{w}\t{c}" for w, c in dictionary_rows()],
    )
    write_lines(
        out / "usage.tsv",
        "word<TAB>year<TAB>value",
        [f"{w}\t{y}\t{v}" for w, y, v in usage_rows()],
    )


if __name__ == "__main__":
    main()
