"""Tokenizer and entry-point search behaviour.

Rankings are hand-scored against the frozen dataset keyword lists and the
published stop-word files, so these tests double as a regression net for
both.
"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artemus import InvalidValue, search, tokenize


def score_map(graph, query, lang):
    return {m.entry_point_id: m.score for m in search(graph, query, lang, 10)}


class TestTokenize:
    def test_stop_words_removed(self):
        assert tokenize("I have just been made homeless", "en") == ["made", "homeless"]

    def test_empty_input(self):
        assert tokenize("", "en") == []

    def test_diacritics_preserved(self):
        assert tokenize("Tŷ!", "cy") == ["tŷ"]

    def test_lowercases_and_strips_punctuation(self):
        assert tokenize("The Council REFUSED housing.", "en") == [
            "council",
            "refused",
            "housing",
        ]

    def test_underscores_split_tokens(self):
        assert tokenize("snake_case_words", "en") == ["snake", "case", "words"]

    def test_welsh_clitics_are_stop_words(self):
        # "o'r" splits into "o" and "r", both on the Welsh stop list.
        assert tokenize("o'r ysgol", "cy") == ["ysgol"]

    def test_english_contraction_fragments_are_stop_words(self):
        assert tokenize("don't", "en") == []

    def test_unsupported_language(self):
        with pytest.raises(InvalidValue):
            tokenize("anything", "fr")


class TestSearchHousing:
    def test_homelessness_query_ranks_entry_first(self, housing):
        matches = search(housing, "I have just been made homeless", "en", 3)
        assert matches[0].entry_point_id == "homelessness-entry"

    def test_homelessness_query_score_and_phrases(self, housing):
        # Two whole phrases ("made homeless", "homeless") at 2 points each;
        # no leftover single-token hits.
        match = search(housing, "I have just been made homeless", "en", 3)[0]
        assert match.score == 4
        assert match.matched_phrases == ("made homeless", "homeless")

    def test_whole_phrase_plus_single_token(self, housing):
        # "eviction" is a whole one-token phrase (2), "council" is a single
        # hit from the unmatched "council refused housing" phrase (1).
        match = search(housing, "eviction council", "en", 3)[0]
        assert match.score == 3
        assert match.matched_phrases == ("eviction", "council")

    def test_gibberish_matches_nothing(self, housing):
        assert search(housing, "zzz qqq", "en", 3) == []

    def test_empty_query_matches_nothing(self, housing):
        assert search(housing, "", "en", 3) == []

    def test_all_stop_word_query_matches_nothing(self, housing):
        assert search(housing, "i have just been", "en", 3) == []

    def test_welsh_phrase_match(self, housing):
        # The phrase itself tokenizes to [lle, fyw]; stop words are removed
        # from keyword phrases the same way as from queries.
        match = search(housing, "dim lle i fyw", "cy", 3)[0]
        assert match.entry_point_id == "homelessness-entry"
        assert match.score == 2
        assert match.matched_phrases == ("dim lle i fyw",)

    def test_languages_are_not_mixed(self, housing):
        # English wording scores zero against the Welsh keyword lists.
        assert search(housing, "made homeless", "cy", 3) == []

    def test_invalid_k(self, housing):
        with pytest.raises(InvalidValue):
            search(housing, "homeless", "en", 0)
        with pytest.raises(InvalidValue):
            search(housing, "homeless", "en", -2)


class TestSearchEducation:
    def test_tie_breaks_by_declaration_order(self, education):
        # "exclusion" is a single-token hit for all three entry points.
        matches = search(education, "exclusion", "en", 10)
        assert [m.entry_point_id for m in matches] == [
            "permanent-exclusion-entry",
            "fixed-term-long-entry",
            "fixed-term-short-entry",
        ]
        assert [m.score for m in matches] == [1, 1, 1]
        assert all(m.matched_phrases == ("exclusion",) for m in matches)

    def test_phrase_match_beats_token_overlap(self, education):
        matches = search(education, "my child was suspended from school", "en", 10)
        assert [m.entry_point_id for m in matches] == [
            "fixed-term-short-entry",
            "permanent-exclusion-entry",
            "fixed-term-long-entry",
        ]
        short, permanent, long_ = matches
        assert short.score == 3
        assert short.matched_phrases == ("suspended from school", "suspended")
        assert permanent.score == 1
        assert permanent.matched_phrases == ("school",)
        assert long_.score == 1
        assert long_.matched_phrases == ("suspended",)

    def test_k_caps_results(self, education):
        matches = search(education, "exclusion", "en", 1)
        assert [m.entry_point_id for m in matches] == ["permanent-exclusion-entry"]

    def test_welsh_ranking(self, education):
        matches = search(education, "wedi ei wahardd yn barhaol", "cy", 10)
        assert [m.entry_point_id for m in matches] == [
            "permanent-exclusion-entry",
            "fixed-term-long-entry",
            "fixed-term-short-entry",
        ]
        assert [m.score for m in matches] == [2, 1, 1]

    def test_no_zero_score_matches(self, education):
        for query in ("exclusion", "school days", "zzz", "suspended"):
            for match in search(education, query, "en", 10):
                assert match.score > 0


WORD_POOL = [
    "made",
    "homeless",
    "homelessness",
    "council",
    "refused",
    "housing",
    "eviction",
    "decision",
    "nowhere",
    "live",
    "the",
    "i",
    "was",
    "about",
]

# None of these appear in any housing keyword phrase.
UNRELATED = ["zebra", "kettle", "meteor", "plinth"]


class TestProperties:
    @settings(max_examples=60, deadline=None)
    @given(data=st.data())
    def test_unrelated_token_never_changes_scores(self, data, housing):
        base = data.draw(st.lists(st.sampled_from(WORD_POOL), max_size=8))
        word = data.draw(st.sampled_from(UNRELATED))
        position = data.draw(st.integers(0, len(base)))
        extended = base[:position] + [word] + base[position:]
        assert score_map(housing, " ".join(extended), "en") == score_map(
            housing, " ".join(base), "en"
        )

    @settings(max_examples=60, deadline=None)
    @given(
        words=st.lists(st.sampled_from(WORD_POOL), max_size=8),
        k=st.integers(1, 4),
    )
    def test_results_sorted_capped_and_deterministic(self, words, k, housing, education):
        query = " ".join(words)
        for graph in (housing, education):
            matches = search(graph, query, "en", k)
            assert len(matches) <= k
            scores = [m.score for m in matches]
            assert scores == sorted(scores, reverse=True)
            assert matches == search(graph, query, "en", k)
