import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpuscontrast import (
    AssocConfig,
    AssociationTable,
    Corpus,
    association_score,
    build_association_table,
    contrast_table,
    strong_words,
    top_frequent_strong,
)
from corpuscontrast.association import AssocEntry


def corpus_from_counts(name, counts):
    return Corpus(name, doc_count=1, freq=dict(counts), total_tokens=sum(counts.values()))


def corpus_from_tokens(name, tokens):
    counts = {}
    for token in tokens:
        counts[token] = counts.get(token, 0) + 1
    return Corpus(name, doc_count=1, freq=counts, total_tokens=len(tokens))


def oracle_score(tokens_t, tokens_r, word, substitute=0.5):
    """Brute-force rate log-ratio straight from raw token lists."""
    ft = tokens_t.count(word) or substitute
    fr = tokens_r.count(word) or substitute
    return math.log2((ft * len(tokens_r)) / (fr * len(tokens_t)))


def random_token_lists(rng, max_tokens=1000):
    vocab = [f"v{i}" for i in range(rng.randint(3, 40))]
    weights = [rng.random() + 0.05 for _ in vocab]
    tokens_t = rng.choices(vocab, weights, k=rng.randint(30, max_tokens))
    tokens_r = rng.choices(vocab, weights[::-1], k=rng.randint(30, max_tokens))
    return tokens_t, tokens_r


class TestAssociationScore:
    def test_direct_arithmetic(self):
        score, smoothed = association_score(50, 100, 1000, 10000)
        assert score == pytest.approx(math.log2(5), abs=1e-12)
        assert score == pytest.approx(2.321928094887362, abs=1e-12)
        assert not smoothed

    def test_equal_rates_score_zero(self):
        score, smoothed = association_score(10, 100, 1000, 10000)
        assert score == 0.0
        assert not smoothed

    def test_zero_reference_count_substituted(self):
        score, smoothed = association_score(25, 0, 1000, 10000)
        assert score == pytest.approx(8.965784284662087, abs=1e-12)
        assert smoothed

    def test_zero_target_count_substituted(self):
        score, smoothed = association_score(0, 25, 10000, 1000)
        assert score == pytest.approx(-8.965784284662087, abs=1e-12)
        assert smoothed

    def test_absent_from_both_rejected(self):
        with pytest.raises(ValueError):
            association_score(0, 0, 1000, 1000)

    def test_empty_totals_rejected(self):
        with pytest.raises(ValueError):
            association_score(1, 1, 0, 100)

    def test_config_validation(self):
        with pytest.raises(ValueError):
            AssocConfig(min_total_freq=0)
        with pytest.raises(ValueError):
            AssocConfig(strong_threshold=0)
        with pytest.raises(ValueError):
            AssocConfig(zero_count_substitute=1.0)


class TestBuildTable:
    def test_min_frequency_boundary(self):
        target = corpus_from_counts("t", {"rare": 12, "ok": 13, "pad": 200})
        reference = corpus_from_counts("r", {"rare": 12, "ok": 12, "pad": 200})
        table = build_association_table(target, reference)
        assert "rare" not in table.entries  # 24 < 25
        assert "ok" in table.entries  # 25 inclusive
        assert table.entries["ok"].freq_target == 13
        assert table.entries["ok"].freq_reference == 12

    def test_empty_corpus_rejected(self):
        empty = corpus_from_counts("t", {})
        full = corpus_from_counts("r", {"a": 30})
        with pytest.raises(ValueError):
            build_association_table(empty, full)
        with pytest.raises(ValueError):
            build_association_table(full, empty)

    def test_matches_brute_force_oracle(self):
        rng = random.Random(42)
        for _ in range(25):
            tokens_t, tokens_r = random_token_lists(rng)
            table = build_association_table(
                corpus_from_tokens("t", tokens_t),
                corpus_from_tokens("r", tokens_r),
                AssocConfig(min_total_freq=1),
            )
            for word, entry in table.entries.items():
                assert entry.score == pytest.approx(
                    oracle_score(tokens_t, tokens_r, word), abs=1e-9
                )

    def test_smoothed_flag_set_only_for_single_zero(self):
        target = corpus_from_counts("t", {"onlyt": 30, "both": 40})
        reference = corpus_from_counts("r", {"onlyr": 30, "both": 40})
        table = build_association_table(target, reference)
        assert table.entries["onlyt"].smoothed
        assert table.entries["onlyr"].smoothed
        assert not table.entries["both"].smoothed


class TestContrastTable:
    def test_same_math_as_association(self):
        a = corpus_from_counts("a", {"x": 30, "y": 50})
        b = corpus_from_counts("b", {"x": 10, "y": 90})
        assert contrast_table(a, b) == build_association_table(a, b)

    def test_antisymmetry_when_unsmoothed(self):
        rng = random.Random(9)
        tokens_a, tokens_b = random_token_lists(rng, max_tokens=400)
        cfg = AssocConfig(min_total_freq=1)
        forward = contrast_table(corpus_from_tokens("a", tokens_a), corpus_from_tokens("b", tokens_b), cfg)
        backward = contrast_table(corpus_from_tokens("b", tokens_b), corpus_from_tokens("a", tokens_a), cfg)
        checked = 0
        for word, entry in forward.entries.items():
            if not entry.smoothed:
                assert entry.score == pytest.approx(-backward.entries[word].score, abs=1e-9)
                checked += 1
        assert checked > 0

    def test_equal_rates_zero(self):
        a = corpus_from_counts("a", {"x": 10, "pad": 90})
        b = corpus_from_counts("b", {"x": 20, "pad": 180})
        assert contrast_table(a, b, AssocConfig(min_total_freq=1)).score("x") == 0.0


class TestProperties:
    @settings(max_examples=60, deadline=None)
    @given(
        st.integers(1, 10_000),
        st.integers(1, 10_000),
        st.integers(1, 50_000),
        st.integers(1, 50_000),
        st.integers(2, 9),
    )
    def test_scale_invariance_is_exact(self, ft, fr, pad_t, pad_r, k):
        total_t, total_r = ft + pad_t, fr + pad_r
        base, _ = association_score(ft, fr, total_t, total_r)
        scaled, _ = association_score(k * ft, k * fr, k * total_t, k * total_r)
        assert scaled == base

    @settings(max_examples=60, deadline=None)
    @given(
        st.integers(1, 10_000),
        st.integers(1, 10_000),
        st.integers(1, 50_000),
        st.integers(1, 50_000),
    )
    def test_antisymmetry(self, ft, fr, pad_t, pad_r):
        total_t, total_r = ft + pad_t, fr + pad_r
        forward, _ = association_score(ft, fr, total_t, total_r)
        backward, _ = association_score(fr, ft, total_r, total_t)
        assert forward == pytest.approx(-backward, abs=1e-9)

    @settings(max_examples=60, deadline=None)
    @given(
        st.integers(1, 1000),
        st.integers(1, 1000),
        st.integers(1, 20_000),
        st.integers(1, 20_000),
    )
    def test_monotone_in_target_count(self, ft, fr, pad_t, pad_r):
        total_t, total_r = ft + pad_t + 1, fr + pad_r
        lower, _ = association_score(ft, fr, total_t, total_r)
        higher, _ = association_score(ft + 1, fr, total_t, total_r)
        assert higher > lower


def table_with_scores(scores):
    entries = {
        word: AssocEntry(score, 40, 40, False) for word, score in scores.items()
    }
    return AssociationTable("t", "r", entries)


class TestStrongWords:
    def test_threshold_inclusive(self):
        table = table_with_scores({"edge": 1.5, "below": 1.4999, "neg": -1.5})
        assert strong_words(table, "positive") == {"edge"}
        assert strong_words(table, "negative") == {"neg"}

    def test_bad_direction(self):
        with pytest.raises(ValueError):
            strong_words(table_with_scores({}), "sideways")


class TestTopFrequentStrong:
    def test_frequency_ordering(self):
        table = table_with_scores({"alpha": 2.0, "beta": 2.0})
        corpus = corpus_from_counts("t", {"alpha": 80, "beta": 90})
        assert top_frequent_strong(table, corpus, "positive", 5) == ["beta", "alpha"]

    def test_ties_broken_lexicographically(self):
        table = table_with_scores({"pear": 2.0, "apple": 2.0, "fig": 2.0})
        corpus = corpus_from_counts("t", {"pear": 10, "apple": 10, "fig": 99})
        assert top_frequent_strong(table, corpus, "positive", 5) == ["fig", "apple", "pear"]

    def test_no_padding_below_k(self):
        table = table_with_scores({"one": 3.0})
        corpus = corpus_from_counts("t", {"one": 5})
        assert top_frequent_strong(table, corpus, "positive", 25) == ["one"]

    def test_k_25_list(self):
        scores = {f"word{i:02d}": 1.5 + i / 100 for i in range(40)}
        table = table_with_scores(scores)
        corpus = corpus_from_counts("t", {w: 100 + i for i, w in enumerate(sorted(scores))})
        top = top_frequent_strong(table, corpus, "positive", 25)
        assert len(top) == 25
        assert top[0] == "word39"
