from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from retrorank import textprep
from retrorank.errors import ConfigError


class TestTokenize:
    def test_simple_query(self):
        assert textprep.tokenize("text cell alignment disappears") == [
            "text", "cell", "alignment", "disappears",
        ]

    def test_empty(self):
        assert textprep.tokenize("") == []

    def test_hyphenated_flag_splits(self):
        assert textprep.tokenize("Wimplicit-function-declaration") == [
            "Wimplicit", "function", "declaration",
        ]

    def test_punctuation_is_boundary(self):
        assert textprep.tokenize("Crashed! (again)...") == ["Crashed", "again"]


class TestNormalize:
    def test_lowercases(self):
        assert textprep.normalize(["Crashed"]) == ["crashed"]

    def test_mixed(self):
        assert textprep.normalize(["GCC", "4"]) == ["gcc", "4"]

    def test_acronym(self):
        assert textprep.normalize(["IMO"]) == ["imo"]


class TestStopwords:
    def test_removes_bundled_words(self):
        assert textprep.remove_stopwords(["this", "bug", "is", "fixed"]) == ["bug", "fixed"]

    def test_empty(self):
        assert textprep.remove_stopwords([]) == []

    def test_all_stopwords(self):
        assert textprep.remove_stopwords(["the", "the", "the"]) == []

    def test_bundled_list_has_127_entries(self):
        assert len(textprep.default_stopwords()) == 127

    def test_missing_file_is_config_error(self, tmp_path):
        with pytest.raises(ConfigError):
            textprep.load_stopwords(tmp_path / "nope.txt")

    def test_load_from_file(self, tmp_path):
        path = tmp_path / "stop.txt"
        path.write_text("foo\nbar\n")
        words = textprep.load_stopwords(path)
        assert textprep.remove_stopwords(["foo", "baz"], words) == ["baz"]


class TestStem:
    def test_crashing(self):
        assert textprep.stem("crashing") == "crash"

    def test_crashed(self):
        assert textprep.stem("crashed") == "crash"

    def test_alignment(self):
        assert textprep.stem("alignment") == "align"

    def test_non_alphabetic_unchanged(self):
        assert textprep.stem("4") == "4"
        assert textprep.stem("gcc4") == "gcc4"


class TestPreprocess:
    def test_worked_sentence(self):
        assert textprep.preprocess("This bug is fixed") == ["bug", "fix"]

    def test_empty(self):
        assert textprep.preprocess("") == []

    def test_short_query(self):
        assert textprep.preprocess("hard recalc") == ["hard", "recalc"]

    def test_terms_contain_no_stopwords_or_empties(self):
        terms = textprep.preprocess("The quick brown fox, it jumped over THE lazy dog!")
        assert terms
        stops = textprep.default_stopwords()
        for term in terms:
            assert term
            assert term == term.lower()
            assert term not in stops

    @given(st.text(max_size=200))
    def test_deterministic(self, text):
        assert textprep.preprocess(text) == textprep.preprocess(text)

    @given(st.text(max_size=200))
    def test_terms_are_alnum_lowercase(self, text):
        for term in textprep.preprocess(text):
            assert term
            assert term == term.lower()
            assert all(c.isalnum() for c in term)
