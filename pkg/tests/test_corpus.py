import random
from datetime import datetime, timezone

import pytest
from hypothesis import given
from hypothesis import strategies as st

from corpuscontrast import (
    Document,
    DuplicateDocumentError,
    build_corpus,
    merge_corpora,
    tokenize,
)
from corpuscontrast.corpus import parse_timestamp

from helpers import make_doc


class TestTokenize:
    def test_lowercases_and_strips_punctuation(self):
        assert tokenize("I love Solitude!") == ["i", "love", "solitude"]

    def test_drops_mentions_and_urls_keeps_hashtag_body(self):
        assert tokenize("@bob check www.x.co #MeTime") == ["check", "metime"]

    def test_keeps_internal_apostrophe(self):
        assert tokenize("don't worry") == ["don't", "worry"]

    def test_drops_scheme_urls(self):
        assert tokenize("lonely nights http://a.co/x") == ["lonely", "nights"]

    def test_curly_apostrophe_folds_to_ascii(self):
        assert tokenize("don’t") == ["don't"]

    def test_edge_apostrophes_are_separators(self):
        assert tokenize("'ello cats'") == ["ello", "cats"]

    def test_underscore_separates(self):
        assert tokenize("snake_case") == ["snake", "case"]

    def test_empty_input(self):
        assert tokenize("") == []
        assert tokenize("   \t\n") == []

    @given(st.text(max_size=200))
    def test_token_shape_invariants(self, text):
        for token in tokenize(text):
            assert token
            assert token == token.lower()
            assert not any(ch.isspace() for ch in token)
            assert not token.startswith(("#", "@"))

    @given(st.text(max_size=200))
    def test_idempotent_over_own_output(self, text):
        tokens = tokenize(text)
        assert tokenize(" ".join(tokens)) == tokens


class TestDocument:
    def test_blank_text_rejected(self):
        with pytest.raises(ValueError):
            make_doc(0, "   ")

    def test_parse_timestamp_z_suffix(self):
        ts = parse_timestamp("2020-05-01T12:30:00Z")
        assert ts == datetime(2020, 5, 1, 12, 30, tzinfo=timezone.utc)

    def test_parse_timestamp_offset_normalized_to_utc(self):
        ts = parse_timestamp("2020-05-01T14:30:00+02:00")
        assert ts == datetime(2020, 5, 1, 12, 30, tzinfo=timezone.utc)


class TestBuildCorpus:
    def test_empty(self):
        corpus = build_corpus("t", [])
        assert corpus.doc_count == 0
        assert corpus.total_tokens == 0
        assert corpus.freq == {}

    def test_counts_occurrences_not_types(self):
        corpus = build_corpus("t", [make_doc(0, "a b a")])
        assert corpus.freq == {"a": 2, "b": 1}
        assert corpus.total_tokens == 3

    def test_order_and_sharding_invariant(self):
        docs = [make_doc(0, "a b"), make_doc(1, "b c")]
        whole = build_corpus("t", docs)
        assert build_corpus("t", docs[::-1]) == whole
        shards = [build_corpus("t", [d]) for d in docs]
        merged = merge_corpora("t", shards)
        assert merged.freq == whole.freq
        assert merged.total_tokens == whole.total_tokens
        assert merged.doc_count == whole.doc_count

    def test_duplicate_doc_id_rejected(self):
        docs = [make_doc(0, "a b c"), make_doc(0, "d e f")]
        with pytest.raises(DuplicateDocumentError):
            build_corpus("t", docs)

    def test_parallel_workers_match_sequential(self):
        rng = random.Random(5)
        docs = [
            make_doc(i, " ".join(rng.choices("red blue green cat dog".split(), k=6)))
            for i in range(200)
        ]
        assert build_corpus("t", docs, workers=4) == build_corpus("t", docs)

    @given(st.lists(st.text(alphabet="ab c", min_size=1, max_size=12), max_size=20))
    def test_totals_reconcile_with_tokenizer(self, texts):
        docs = []
        for i, text in enumerate(texts):
            if text.strip():
                docs.append(make_doc(i, text))
        corpus = build_corpus("t", docs)
        emitted = sum(len(tokenize(d.text)) for d in docs)
        assert corpus.total_tokens == emitted
        assert sum(corpus.freq.values()) == emitted
        assert all(count > 0 for count in corpus.freq.values())

    @given(st.permutations(list(range(8))))
    def test_permutation_invariance(self, order):
        docs = [make_doc(i, f"tok{i % 3} shared word{i}") for i in range(8)]
        baseline = build_corpus("t", docs)
        shuffled = [docs[i] for i in order]
        assert build_corpus("t", shuffled) == baseline
