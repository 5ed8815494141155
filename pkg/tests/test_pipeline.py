import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blendsmith.errors import (
    EmptyDescriptionError,
    NoCandidatesError,
    NoRootsError,
)
from blendsmith.pipeline import (
    RuleTable,
    SyllableUnit,
    TaggedWord,
    WordOrigin,
    allowed_rules,
    build_syllable_pool,
    extract_roots,
    generate_blends,
    expand_related,
    tag_pos,
    tokenize,
)
from blendsmith.resources import PosLexicon, PosTag, SimileDb, SynonymDb

from conftest import EXAMPLE_DESCRIPTION

V = PosTag.VERB
N = PosTag.NOUN
ADJ = PosTag.ADJECTIVE
ADV = PosTag.ADVERB


def unit(text, tag, parent=None, parts=None, index=0):
    word = parent or text
    tagged = TaggedWord(word, tag, WordOrigin.ROOT, word)
    return SyllableUnit(text, tag, tagged, index, parts or (text,))


class TestTokenize:
    def test_example_sentence(self):
        assert tokenize(EXAMPLE_DESCRIPTION) == [
            "creating", "an", "application", "to", "split", "expense", "wisely",
        ]

    def test_non_alphabetic_delimiters(self):
        assert tokenize("A-B c") == ["a", "b", "c"]

    def test_no_alphabetic_content(self):
        with pytest.raises(EmptyDescriptionError):
            tokenize("123 !!")

    def test_empty_string(self):
        with pytest.raises(EmptyDescriptionError):
            tokenize("")


class TestExtractRoots:
    def test_example_sentence(self, store):
        roots = extract_roots(tokenize(EXAMPLE_DESCRIPTION), store.stopwords)
        assert roots == ["creating", "application", "split", "expense", "wisely"]

    def test_all_stopwords(self, store):
        with pytest.raises(NoRootsError):
            extract_roots(["an", "to"], store.stopwords)

    def test_duplicates_preserved(self, store):
        assert extract_roots(["split", "split"], store.stopwords) == ["split", "split"]


class TestTagPos:
    def test_example_roots(self, store):
        tagged = tag_pos(
            ["creating", "application", "split", "expense", "wisely"],
            store.pos_lexicon,
        )
        assert {(w.surface, w.tag) for w in tagged} == {
            ("creating", V),
            ("application", N),
            ("split", V),
            ("expense", N),
            ("wisely", ADV),
        }
        assert all(w.origin is WordOrigin.ROOT and w.root == w.surface for w in tagged)

    def test_argmax_of_lexicon_frequencies(self):
        lexicon = PosLexicon({"split": ((V, 0.9), (N, 0.1))})
        assert tag_pos(["split"], lexicon)[0].tag is V

    def test_tie_breaks_toward_earlier_tag(self):
        lexicon = PosLexicon({"tear": ((V, 0.5), (N, 0.5))})
        assert tag_pos(["tear"], lexicon)[0].tag is N

    def test_suffix_fallbacks(self):
        lexicon = PosLexicon({})
        cases = {
            "flurbly": ADV,
            "blorting": V,
            "plurgate": V,
            "frumious": ADJ,
            "bugful": ADJ,
            "bortive": ADJ,
            "glorp": N,
        }
        for word, expected in cases.items():
            assert tag_pos([word], lexicon)[0].tag is expected

    def test_other_dominant_words_dropped(self, store):
        assert tag_pos(["hmm"], store.pos_lexicon) == []

    def test_deduplicated_on_surface_and_tag(self, store):
        assert len(tag_pos(["split", "split"], store.pos_lexicon)) == 1


class TestExpandRelated:
    def test_metaphor_reaches_adverb_through_stem(self):
        roots = [TaggedWord("wisely", ADV, WordOrigin.ROOT, "wisely")]
        related = expand_related(
            roots, SynonymDb({}), SimileDb({"wise": ("owl",)}), max_per_root=5
        )
        assert TaggedWord("owl", ADV, WordOrigin.METAPHOR, "wisely") in related

    def test_adjective_root_uses_simile_directly(self):
        roots = [TaggedWord("quick", ADJ, WordOrigin.ROOT, "quick")]
        related = expand_related(
            roots, SynonymDb({}), SimileDb({"quick": ("fox",)}), max_per_root=5
        )
        assert TaggedWord("fox", ADJ, WordOrigin.METAPHOR, "quick") in related

    def test_noun_roots_get_no_metaphors(self):
        roots = [TaggedWord("owl", N, WordOrigin.ROOT, "owl")]
        related = expand_related(
            roots, SynonymDb({}), SimileDb({"owl": ("statue",)}), max_per_root=5
        )
        assert len(related) == 1

    def test_synonyms_inherit_root_tag(self):
        roots = [TaggedWord("split", V, WordOrigin.ROOT, "split")]
        related = expand_related(
            roots,
            SynonymDb({("split", V): ("break",)}),
            SimileDb({}),
            max_per_root=5,
        )
        assert TaggedWord("break", V, WordOrigin.SYNONYM, "split") in related

    def test_max_per_root_caps_synonyms(self):
        roots = [TaggedWord("split", V, WordOrigin.ROOT, "split")]
        related = expand_related(
            roots,
            SynonymDb({("split", V): ("break", "tear", "cleave")}),
            SimileDb({}),
            max_per_root=2,
        )
        surfaces = [w.surface for w in related]
        assert surfaces == ["split", "break", "tear"]

    def test_no_expansions_is_identity(self):
        roots = [TaggedWord("split", V, WordOrigin.ROOT, "split")]
        assert expand_related(roots, SynonymDb({}), SimileDb({}), 0) == roots

    def test_roots_come_before_all_expansions(self, store):
        roots = [
            TaggedWord("split", V, WordOrigin.ROOT, "split"),
            TaggedWord("wisely", ADV, WordOrigin.ROOT, "wisely"),
        ]
        related = expand_related(roots, store.synonyms, store.similes, 5)
        origins = [w.origin for w in related]
        assert origins[: len(roots)] == [WordOrigin.ROOT, WordOrigin.ROOT]
        assert origins[len(roots) :] == sorted(
            origins[len(roots) :], key=[WordOrigin.SYNONYM, WordOrigin.METAPHOR].index
        )


class TestBuildSyllablePool:
    def test_atoms_carry_parent_tag(self, patterns):
        words = [
            TaggedWord("creating", V, WordOrigin.ROOT, "creating"),
            TaggedWord("application", N, WordOrigin.ROOT, "application"),
        ]
        pool = build_syllable_pool(words, patterns)
        texts = {(u.text, u.tag) for u in pool}
        assert {("cre", V), ("at", V), ("ing", V)} <= texts
        assert {("app", N), ("li", N), ("ca", N), ("tion", N)} <= texts

    def test_monosyllable_is_single_unit(self, patterns):
        words = [TaggedWord("owl", ADV, WordOrigin.ROOT, "owl")]
        pool = build_syllable_pool(words, patterns)
        assert [(u.text, u.parts) for u in pool] == [("owl", ("owl",))]

    def test_shared_syllables_pool_once(self, patterns):
        words = [
            TaggedWord("split", V, WordOrigin.ROOT, "split"),
            TaggedWord("split", V, WordOrigin.SYNONYM, "cleave"),
        ]
        assert len(build_syllable_pool(words, patterns)) == 1

    def test_composite_prefixes_and_suffixes(self, patterns):
        words = [TaggedWord("application", N, WordOrigin.ROOT, "application")]
        by_text = {u.text: u for u in build_syllable_pool(words, patterns)}
        assert by_text["application"].parts == ("app", "li", "ca", "tion")
        assert by_text["appli"].parts == ("app", "li")
        assert by_text["cation"].parts == ("ca", "tion")
        assert by_text["cation"].index == 2
        # middle runs are not units on their own
        assert "lica" not in by_text

    def test_whole_word_composite_for_two_syllables(self, patterns):
        words = [TaggedWord("expense", N, WordOrigin.ROOT, "expense")]
        by_text = {u.text: u for u in build_syllable_pool(words, patterns)}
        assert by_text["expense"].parts == ("ex", "pense")


class TestRuleTable:
    def test_lookup_is_unordered(self):
        table = RuleTable()
        assert table.percentage(N, V) == table.percentage(V, N) == 8.02

    def test_default_filter_removes_exactly_three(self):
        table = RuleTable()
        disallowed = {
            pair for pair in table.rows if not table.allows(*pair)
        }
        assert disallowed == {(V, ADJ), (V, V), (ADV, ADV)}

    def test_allowed_rules_at_default_threshold(self):
        assert len(allowed_rules(RuleTable())) == 7

    def test_extreme_threshold_allows_nothing(self):
        assert allowed_rules(RuleTable(threshold=100.0)) == set()

    def test_negative_percentage_rejected(self):
        with pytest.raises(ValueError):
            RuleTable(rows={(N, N): -1.0})


class TestGenerateBlends:
    def test_verb_adverb_pair(self):
        pool = [unit("split", V), unit("wise", ADV, parent="wisely")]
        texts = [c.text for c in generate_blends(pool, RuleTable())]
        assert texts == ["splitwise", "wisesplit"]

    def test_verb_verb_only_pool_yields_nothing(self):
        pool = [unit("split", V), unit("break", V)]
        with pytest.raises(NoCandidatesError):
            generate_blends(pool, RuleTable())

    def test_composite_unit_carries_its_syllables(self):
        pool = [
            unit("expense", N, parts=("ex", "pense")),
            unit("break", V),
        ]
        by_text = {c.text: c for c in generate_blends(pool, RuleTable())}
        candidate = by_text["expensebreak"]
        assert candidate.parts == ("ex", "pense", "break")
        assert candidate.display == "ExPenseBreak"
        assert candidate.sources == ("expense", "break")

    def test_two_units_from_one_word_never_combine(self):
        word = TaggedWord("expense", N, WordOrigin.ROOT, "expense")
        pool = [
            SyllableUnit("ex", N, word, 0, ("ex",)),
            SyllableUnit("pense", N, word, 1, ("pense",)),
        ]
        with pytest.raises(NoCandidatesError):
            generate_blends(pool, RuleTable())

    def test_length_cap(self):
        pool = [unit("abcdefgh", N), unit("ijklmnop", N), unit("xy", N)]
        texts = {c.text for c in generate_blends(pool, RuleTable(), arities=(2,))}
        assert "abcdefghijklmnop" not in texts
        assert "abcdefghxy" in texts

    def test_duplicate_texts_keep_first_enumeration(self):
        pool = [
            unit("a", N, parent="p1"),
            unit("bcd", N, parent="p2"),
            unit("ab", N, parent="p3"),
            unit("cd", N, parent="p4"),
        ]
        by_text = {c.text: c for c in generate_blends(pool, RuleTable(), arities=(2,))}
        assert [u.text for u in by_text["abcd"].units] == ["a", "bcd"]

    def test_output_sorted_by_text(self, store):
        pool = [unit("split", V), unit("wise", ADV, parent="wisely"), unit("owl", N)]
        texts = [c.text for c in generate_blends(pool, RuleTable())]
        assert texts == sorted(texts)

    def test_arity_subset(self):
        pool = [unit("ab", N), unit("cd", N), unit("ef", V)]
        for candidate in generate_blends(pool, RuleTable(), arities=(2,)):
            assert len(candidate.units) == 2

    def test_bad_arity_rejected(self):
        with pytest.raises(ValueError):
            generate_blends([unit("ab", N)], RuleTable(), arities=(4,))

    def test_bad_cap_rejected(self):
        with pytest.raises(ValueError):
            generate_blends([unit("ab", N)], RuleTable(), cap=0)

    def test_deterministic(self):
        pool = [unit("ab", N), unit("cd", N), unit("ef", V), unit("gh", ADV)]
        first = generate_blends(pool, RuleTable())
        second = generate_blends(pool, RuleTable())
        assert first == second


class TestExampleDescriptionEndToEnd:
    def test_expected_names_in_candidate_set(self, store):
        roots = extract_roots(tokenize(EXAMPLE_DESCRIPTION), store.stopwords)
        related = expand_related(
            tag_pos(roots, store.pos_lexicon), store.synonyms, store.similes, 5
        )
        pool = build_syllable_pool(related, store.hyphenation)
        texts = {c.text for c in generate_blends(pool, RuleTable())}
        assert {"splitwise", "wisesplit", "breakowl", "expensebreak"} <= texts


_pool_entries = st.lists(
    st.tuples(
        st.text(alphabet="ab", min_size=1, max_size=4),
        st.sampled_from([N, V, ADJ, ADV]),
        st.integers(min_value=0, max_value=5),
    ),
    min_size=2,
    max_size=12,
)


def _build_pool(entries):
    pool = []
    seen = set()
    for text, tag, parent_idx in entries:
        if (text, tag) in seen:
            continue
        seen.add((text, tag))
        pool.append(unit(text, tag, parent=f"word{parent_idx}"))
    return pool


@settings(max_examples=60, deadline=None)
@given(_pool_entries)
def test_every_candidate_respects_the_filters(entries):
    pool = _build_pool(entries)
    table = RuleTable()
    try:
        candidates = generate_blends(pool, table)
    except NoCandidatesError:
        return
    for candidate in candidates:
        parents = [u.parent.surface for u in candidate.units]
        assert len(set(parents)) == len(parents)
        assert len(candidate.text) <= 15
        assert 2 <= len(candidate.units) <= 3
        for a, b in itertools.combinations(candidate.units, 2):
            assert table.allows(a.tag, b.tag)


@settings(max_examples=60, deadline=None)
@given(_pool_entries)
def test_arity_two_matches_double_loop_oracle(entries):
    pool = _build_pool(entries)
    table = RuleTable()

    expected = {}
    for a in pool:
        for b in pool:
            if a is b or a.parent.surface == b.parent.surface:
                continue
            if not table.allows(a.tag, b.tag):
                continue
            if len(a.text) + len(b.text) > 15:
                continue
            expected.setdefault(a.text + b.text, (a.text, b.text))

    try:
        candidates = generate_blends(pool, table, arities=(2,))
    except NoCandidatesError:
        assert expected == {}
        return
    assert len(candidates) == len(expected)
    assert {c.text for c in candidates} == set(expected)
