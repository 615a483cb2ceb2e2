"""Corpus-level profiles: emotion label percentages, VAD extremes, VAD
trends along an association axis, age-group percentages, and name-based
gender splitting.

Emotion, VAD-extreme, and age percentages are computed over token
occurrences (a word counted once per occurrence); the trend curve
averages over word types. Denominators are carried on every profile so
each percentage stays re-derivable.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .association import AssociationTable
from .corpus import Corpus, Document, build_corpus
from .lexicons import (
    AGE_GROUPS,
    EMOTION_LABELS,
    AgeLexicon,
    EmotionLexicon,
    NameGenderTable,
    VadLexicon,
)

VAD_DIMENSIONS = ("valence", "arousal", "dominance")

_NAME_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


class Gender(Enum):
    FEMALE = "female"
    MALE = "male"
    UNKNOWN = "unknown"


def _percent(count: int, denominator: int) -> float:
    return 100.0 * count / denominator if denominator else 0.0


@dataclass(frozen=True)
class EmotionProfile:
    corpus_name: str
    label_counts: dict[str, int]
    lexicon_token_count: int

    @property
    def is_empty(self) -> bool:
        return self.lexicon_token_count == 0

    @property
    def percentages(self) -> dict[str, float]:
        return {
            label: _percent(self.label_counts.get(label, 0), self.lexicon_token_count)
            for label in sorted(EMOTION_LABELS)
        }


@dataclass(frozen=True)
class VadExtremesProfile:
    corpus_name: str
    counts: dict[str, dict[str, int]]  # dimension -> {"low": n, "high": n}
    lexicon_token_count: int
    low_max: float
    high_min: float

    @property
    def is_empty(self) -> bool:
        return self.lexicon_token_count == 0

    @property
    def percentages(self) -> dict[str, dict[str, float]]:
        return {
            dim: {
                cls: _percent(self.counts[dim][cls], self.lexicon_token_count)
                for cls in ("low", "high")
            }
            for dim in VAD_DIMENSIONS
        }


@dataclass(frozen=True)
class TrendBin:
    center: float
    word_type_count: int
    mean_valence: float
    mean_arousal: float
    mean_dominance: float


@dataclass(frozen=True)
class TrendCurve:
    step: float
    min_words: int
    bins: tuple[TrendBin, ...] = ()


@dataclass(frozen=True)
class AgeProfile:
    corpus_name: str
    group_counts: dict[str, int]
    lexicon_token_count: int

    @property
    def is_empty(self) -> bool:
        return self.lexicon_token_count == 0

    @property
    def percentages(self) -> dict[str, float]:
        return {
            group: _percent(self.group_counts.get(group, 0), self.lexicon_token_count)
            for group in AGE_GROUPS
        }


def emotion_profile(
    corpus: Corpus, lex: EmotionLexicon, exclude: Iterable[str] = ()
) -> EmotionProfile:
    """Percentage of lexicon-word occurrences carrying each label.

    The denominator is every occurrence of a corpus token present in the
    lexicon and not excluded; excluded words contribute to neither side.
    """
    excluded = set(exclude)
    label_counts = {label: 0 for label in sorted(EMOTION_LABELS)}
    denominator = 0
    for token, count in corpus.freq.items():
        if token in excluded or token not in lex:
            continue
        denominator += count
        for label in lex.labels(token):
            label_counts[label] += count
    return EmotionProfile(corpus.name, label_counts, denominator)


def vad_extremes(
    corpus: Corpus,
    lex: VadLexicon,
    low_max: float = 0.25,
    high_min: float = 0.75,
    exclude: Iterable[str] = (),
) -> VadExtremesProfile:
    """Percentage of lexicon-word occurrences with extreme VAD scores.

    Scores <= low_max count as low, >= high_min as high (both bounds
    inclusive); mid-range occurrences count in neither class.
    """
    if not low_max < high_min:
        raise ValueError("low_max must be below high_min")
    excluded = set(exclude)
    counts = {dim: {"low": 0, "high": 0} for dim in VAD_DIMENSIONS}
    denominator = 0
    for token, count in corpus.freq.items():
        if token in excluded or token not in lex:
            continue
        denominator += count
        scores = lex.entries[token]
        for dim in VAD_DIMENSIONS:
            value = getattr(scores, dim)
            if value <= low_max:
                counts[dim]["low"] += count
            elif value >= high_min:
                counts[dim]["high"] += count
    return VadExtremesProfile(corpus.name, counts, denominator, low_max, high_min)


def vad_trend(
    table: AssociationTable,
    lex: VadLexicon,
    step: float = 0.5,
    min_words: int = 100,
) -> TrendCurve:
    """Average VAD scores of word types binned by association score.

    Each scored word in the lexicon lands in exactly one bin: the bin
    centered at c covers [c - step/2, c + step/2). Bins with fewer than
    min_words word types are omitted.
    """
    if step <= 0:
        raise ValueError("step must be > 0")
    if min_words < 1:
        raise ValueError("min_words must be >= 1")

    sums: dict[int, list[float]] = {}
    counts: dict[int, int] = {}
    for word, entry in table.entries.items():
        if word not in lex:
            continue
        index = math.floor(entry.score / step + 0.5)
        scores = lex.entries[word]
        acc = sums.setdefault(index, [0.0, 0.0, 0.0])
        acc[0] += scores.valence
        acc[1] += scores.arousal
        acc[2] += scores.dominance
        counts[index] = counts.get(index, 0) + 1

    bins = []
    for index in sorted(counts):
        n = counts[index]
        if n < min_words:
            continue
        v_sum, a_sum, d_sum = sums[index]
        bins.append(TrendBin(index * step, n, v_sum / n, a_sum / n, d_sum / n))
    return TrendCurve(step, min_words, tuple(bins))


def infer_gender(display_name: str, table: NameGenderTable) -> Gender:
    """Match the first name-like token of a display name against the table.

    Any character that is not a letter or digit separates tokens; only
    the first token is consulted.
    """
    match = _NAME_TOKEN_RE.search(display_name)
    if match is None:
        return Gender.UNKNOWN
    first = match.group(0).lower()
    if first in table.female:
        return Gender.FEMALE
    if first in table.male:
        return Gender.MALE
    return Gender.UNKNOWN


def split_by_gender(
    docs: Sequence[Document], table: NameGenderTable
) -> tuple[Corpus, Corpus, int]:
    """Partition documents by inferred author gender into two corpora.

    Returns (female corpus, male corpus, count of unknown documents);
    the three parts always sum to the input count.
    """
    female_docs = []
    male_docs = []
    unknown = 0
    for doc in docs:
        gender = infer_gender(doc.user_display_name, table)
        if gender is Gender.FEMALE:
            female_docs.append(doc)
        elif gender is Gender.MALE:
            male_docs.append(doc)
        else:
            unknown += 1
    return (
        build_corpus("female", female_docs),
        build_corpus("male", male_docs),
        unknown,
    )


def age_profile(corpus: Corpus, lex: AgeLexicon) -> AgeProfile:
    """Percentage of lexicon-word occurrences associated with each age
    group; a word in several groups counts toward each of them but only
    once in the denominator."""
    group_counts = {group: 0 for group in AGE_GROUPS}
    denominator = 0
    for token, count in corpus.freq.items():
        if token not in lex:
            continue
        denominator += count
        for group in lex.entries[token]:
            group_counts[group] += count
    return AgeProfile(corpus.name, group_counts, denominator)


def profile_diff(a: EmotionProfile, b: EmotionProfile) -> dict[str, float]:
    """Percentage-point difference a - b per label (positive = higher in a)."""
    pa, pb = a.percentages, b.percentages
    if pa.keys() != pb.keys():
        raise ValueError("profiles carry different label sets")
    return {label: pa[label] - pb[label] for label in pa}
