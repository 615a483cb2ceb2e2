"""Loaders for the word-emotion, VAD, and word-age lexicons, and the
builder for the baby-name gender table.

All lexicon keys are lowercased with the same normalization the tokenizer
applies, so corpus/lexicon joins are consistent.
"""

from __future__ import annotations

import csv
import re
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

EMOTION_LABELS = frozenset(
    {
        "anger",
        "anticipation",
        "disgust",
        "fear",
        "joy",
        "sadness",
        "surprise",
        "trust",
        "positive",
        "negative",
    }
)

AGE_GROUPS = ("13to18", "19to22", "23to29", "30plus")

# "Alpha-numeric" for the age lexicon: letters and digits only, no
# apostrophes or underscores.
_ALNUM_RE = re.compile(r"[^\W_]+", re.UNICODE)

_SSA_YEAR_RE = re.compile(r"yob(\d{4})", re.IGNORECASE)


class LexiconFormatError(ValueError):
    """A lexicon file violates its documented format."""

    def __init__(self, path, line_no: int, problem: str):
        super().__init__(f"{path}:{line_no}: {problem}")
        self.path = path
        self.line_no = line_no
        self.problem = problem


@dataclass(frozen=True)
class EmotionLexicon:
    """Binary word-emotion labels; words with no labels stay as keys
    because lexicon membership defines profile denominators."""

    entries: dict[str, frozenset[str]] = field(default_factory=dict)

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def labels(self, word: str) -> frozenset[str]:
        return self.entries.get(word, frozenset())


@dataclass(frozen=True)
class VadScores:
    valence: float
    arousal: float
    dominance: float


@dataclass(frozen=True)
class VadLexicon:
    entries: dict[str, VadScores] = field(default_factory=dict)

    def __contains__(self, word: str) -> bool:
        return word in self.entries


@dataclass(frozen=True)
class AgeLexicon:
    """Single alpha-numeric lexicon terms mapped to the age groups they
    are significantly positively associated with (possibly none)."""

    entries: dict[str, frozenset[str]] = field(default_factory=dict)

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    @property
    def single_token_count(self) -> int:
        return len(self.entries)

    def group_counts(self) -> dict[str, int]:
        counts = {group: 0 for group in AGE_GROUPS}
        for groups in self.entries.values():
            for group in groups:
                counts[group] += 1
        return counts


@dataclass(frozen=True)
class NameGenderTable:
    female: frozenset[str] = frozenset()
    male: frozenset[str] = frozenset()


def load_emotion_lexicon(path) -> EmotionLexicon:
    """Parse the flat word TAB emotion TAB 0/1 format."""
    entries: dict[str, set[str]] = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 3:
                raise LexiconFormatError(path, line_no, f"expected 3 fields, got {len(parts)}")
            word, emotion, flag = parts
            word = word.strip().lower()
            emotion = emotion.strip().lower()
            if emotion not in EMOTION_LABELS:
                raise LexiconFormatError(path, line_no, f"unknown emotion {emotion!r}")
            if flag.strip() not in ("0", "1"):
                raise LexiconFormatError(path, line_no, f"flag must be 0 or 1, got {flag!r}")
            labels = entries.setdefault(word, set())
            if flag.strip() == "1":
                labels.add(emotion)
            else:
                labels.discard(emotion)
    return EmotionLexicon({word: frozenset(labels) for word, labels in entries.items()})


def load_vad_lexicon(path) -> VadLexicon:
    """Parse word TAB valence TAB arousal TAB dominance rows.

    A single leading header row is tolerated; scores must lie in [0, 1];
    duplicate words are rejected.
    """
    entries: dict[str, VadScores] = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 4:
                raise LexiconFormatError(path, line_no, f"expected 4 fields, got {len(parts)}")
            word = parts[0].strip().lower()
            try:
                scores = [float(p) for p in parts[1:]]
            except ValueError:
                if line_no == 1:
                    continue
                raise LexiconFormatError(path, line_no, "scores are not numbers") from None
            for value in scores:
                if not 0.0 <= value <= 1.0:
                    raise LexiconFormatError(path, line_no, f"score {value} outside [0, 1]")
            if word in entries:
                raise LexiconFormatError(path, line_no, f"duplicate entry {word!r}")
            entries[word] = VadScores(*scores)
    return VadLexicon(entries)


def load_age_lexicon(path, alpha: float = 0.05) -> AgeLexicon:
    """Parse CSV rows term,group,score,pvalue.

    Every single alpha-numeric term becomes a lexicon key; a term joins a
    group only when its association score is positive and p <= alpha.
    Multi-word and non-alphanumeric terms are skipped.
    """
    entries: dict[str, set[str]] = {}
    with open(path, encoding="utf-8", newline="") as handle:
        for line_no, row in enumerate(csv.reader(handle), start=1):
            if not row or not any(cell.strip() for cell in row):
                continue
            if len(row) != 4:
                raise LexiconFormatError(path, line_no, f"expected 4 fields, got {len(row)}")
            term, group, score_text, p_text = (cell.strip() for cell in row)
            try:
                score = float(score_text)
                p_value = float(p_text)
            except ValueError:
                if line_no == 1:
                    continue
                raise LexiconFormatError(path, line_no, "score/p-value are not numbers") from None
            if group not in AGE_GROUPS:
                raise LexiconFormatError(path, line_no, f"unknown age group {group!r}")
            term = term.lower()
            if not _ALNUM_RE.fullmatch(term):
                continue
            groups = entries.setdefault(term, set())
            if score > 0 and p_value <= alpha:
                groups.add(group)
    return AgeLexicon({term: frozenset(groups) for term, groups in entries.items()})


def build_name_gender_table(
    ssa_files: Iterable,
    year_from: int = 1940,
    year_to: int = 2017,
    min_count: int = 100,
    purity: float = 0.95,
) -> NameGenderTable:
    """Aggregate per-year SSA name files into a gendered first-name table.

    Files are the official yobYYYY.txt CSVs (name,gender,count); only
    years within [year_from, year_to] contribute. A name is admitted when
    its total count is strictly greater than min_count and the share in
    one gender is at least purity.
    """
    female_counts: dict[str, int] = defaultdict(int)
    male_counts: dict[str, int] = defaultdict(int)

    for path in ssa_files:
        match = _SSA_YEAR_RE.search(Path(path).name)
        if match is None:
            raise LexiconFormatError(path, 0, "cannot read year from filename")
        if not year_from <= int(match.group(1)) <= year_to:
            continue
        with open(path, encoding="utf-8", newline="") as handle:
            for line_no, row in enumerate(csv.reader(handle), start=1):
                if not row or not any(cell.strip() for cell in row):
                    continue
                if len(row) != 3:
                    raise LexiconFormatError(path, line_no, f"expected 3 fields, got {len(row)}")
                name, gender, count_text = (cell.strip() for cell in row)
                try:
                    count = int(count_text)
                except ValueError:
                    raise LexiconFormatError(path, line_no, f"bad count {count_text!r}") from None
                if count < 0:
                    raise LexiconFormatError(path, line_no, "negative count")
                if gender.upper() == "F":
                    female_counts[name.lower()] += count
                elif gender.upper() == "M":
                    male_counts[name.lower()] += count
                else:
                    raise LexiconFormatError(path, line_no, f"gender must be F or M, got {gender!r}")

    female: set[str] = set()
    male: set[str] = set()
    for name in female_counts.keys() | male_counts.keys():
        f_count = female_counts.get(name, 0)
        m_count = male_counts.get(name, 0)
        total = f_count + m_count
        if total <= min_count:
            continue
        if f_count / total >= purity:
            female.add(name)
        elif m_count / total >= purity:
            male.add(name)
    return NameGenderTable(frozenset(female), frozenset(male))
