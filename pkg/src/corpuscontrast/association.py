"""Word-association scoring of a target corpus against a reference corpus.

The score for a word is the log2 ratio of its occurrence rates in the two
corpora:

    score(w) = log2( (freq(w, target) * total(reference))
                     / (freq(w, reference) * total(target)) )

Positive scores mean the word occurs at a higher rate in the target.
Low-frequency words (combined count below min_total_freq) are excluded
because rate ratios are unstable for rare events. When a word is absent
from exactly one corpus, the zero count is replaced by a small substitute
so the score stays finite; such entries are flagged as smoothed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .corpus import Corpus


@dataclass(frozen=True)
class AssocConfig:
    min_total_freq: int = 25
    strong_threshold: float = 1.5
    zero_count_substitute: float = 0.5

    def __post_init__(self):
        if self.min_total_freq < 1:
            raise ValueError("min_total_freq must be >= 1")
        if self.strong_threshold <= 0:
            raise ValueError("strong_threshold must be > 0")
        if not 0 < self.zero_count_substitute < 1:
            raise ValueError("zero_count_substitute must be in (0, 1)")


@dataclass(frozen=True)
class AssocEntry:
    score: float
    freq_target: int
    freq_reference: int
    smoothed: bool


@dataclass(frozen=True)
class AssociationTable:
    target_name: str
    reference_name: str
    entries: dict[str, AssocEntry] = field(default_factory=dict)

    def score(self, word: str) -> float:
        return self.entries[word].score

    def __len__(self) -> int:
        return len(self.entries)


def association_score(
    freq_wt: int,
    freq_wr: int,
    total_t: int,
    total_r: int,
    cfg: AssocConfig | None = None,
) -> tuple[float, bool]:
    """Log2 rate ratio of a word between target and reference corpora.

    Returns (score, smoothed). Exactly one zero joint count is replaced
    by cfg.zero_count_substitute; both zero is a domain error.
    """
    cfg = cfg or AssocConfig()
    if total_t <= 0 or total_r <= 0:
        raise ValueError("corpus totals must be positive")
    if freq_wt == 0 and freq_wr == 0:
        raise ValueError("word absent from both corpora")

    smoothed = freq_wt == 0 or freq_wr == 0
    ft = freq_wt if freq_wt > 0 else cfg.zero_count_substitute
    fr = freq_wr if freq_wr > 0 else cfg.zero_count_substitute
    return math.log2((ft * total_r) / (fr * total_t)), smoothed


def build_association_table(
    target: Corpus, reference: Corpus, cfg: AssocConfig | None = None
) -> AssociationTable:
    """Score every word whose combined frequency reaches min_total_freq."""
    cfg = cfg or AssocConfig()
    if target.total_tokens == 0 or reference.total_tokens == 0:
        raise ValueError("cannot score against an empty corpus")

    entries: dict[str, AssocEntry] = {}
    for word in sorted(target.vocabulary() | reference.vocabulary()):
        ft = target.frequency(word)
        fr = reference.frequency(word)
        if ft + fr < cfg.min_total_freq:
            continue
        score, smoothed = association_score(
            ft, fr, target.total_tokens, reference.total_tokens, cfg
        )
        entries[word] = AssocEntry(score, ft, fr, smoothed)
    return AssociationTable(target.name, reference.name, entries)


def contrast_table(
    corpus_a: Corpus, corpus_b: Corpus, cfg: AssocConfig | None = None
) -> AssociationTable:
    """Place words on the a-vs-b contrast axis.

    The difference of the two per-corpus rate log-ratios reduces to a
    single log2 rate ratio with corpus_a as target and corpus_b as
    reference, so this is the same table with those roles. Positive
    scores lean toward corpus_a.
    """
    return build_association_table(corpus_a, corpus_b, cfg)


def strong_words(
    table: AssociationTable, direction: str, cfg: AssocConfig | None = None
) -> set[str]:
    """Words at or beyond the strong-association threshold.

    direction "positive" selects score >= threshold, "negative" selects
    score <= -threshold.
    """
    cfg = cfg or AssocConfig()
    if direction == "positive":
        return {w for w, e in table.entries.items() if e.score >= cfg.strong_threshold}
    if direction == "negative":
        return {w for w, e in table.entries.items() if e.score <= -cfg.strong_threshold}
    raise ValueError(f"direction must be 'positive' or 'negative', got {direction!r}")


def top_frequent_strong(
    table: AssociationTable,
    corpus: Corpus,
    direction: str,
    k: int,
    cfg: AssocConfig | None = None,
) -> list[str]:
    """The k most frequent strongly associated words.

    Ordered by descending frequency in corpus, ties broken
    lexicographically; shorter than k when fewer words qualify.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    words = strong_words(table, direction, cfg)
    ranked = sorted(words, key=lambda w: (-corpus.frequency(w), w))
    return ranked[:k]
