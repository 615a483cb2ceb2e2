"""File formats: line-JSON documents, TSV association tables, CSV/JSON
profile exports.

Every writer goes through atomic_write, so a failed run never leaves a
partial output file behind.
"""

from __future__ import annotations

import csv
import json
import os
import tempfile
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .association import AssocEntry, AssociationTable
from .corpus import Document, parse_timestamp
from .lexicons import NameGenderTable
from .profiles import (
    VAD_DIMENSIONS,
    AgeProfile,
    EmotionProfile,
    TrendCurve,
    VadExtremesProfile,
)
from .stats import Chi2Result

DOCUMENT_FIELDS = ("id", "author_id", "user_name", "timestamp", "text")


@contextmanager
def atomic_write(path):
    """Write to a sibling temp file, renaming over path only on success."""
    path = Path(path)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            yield handle
    except BaseException:
        os.unlink(tmp_name)
        raise
    os.replace(tmp_name, path)


@dataclass
class ReadReport:
    read: int = 0
    malformed: int = 0


def _document_from_record(record) -> Document:
    if not isinstance(record, dict):
        raise ValueError("record is not an object")
    for name in DOCUMENT_FIELDS:
        if not isinstance(record.get(name), str):
            raise ValueError(f"field {name!r} missing or not a string")
    return Document(
        doc_id=record["id"],
        author_id=record["author_id"],
        user_display_name=record["user_name"],
        timestamp=parse_timestamp(record["timestamp"]),
        text=record["text"],
    )


def read_documents(path) -> tuple[list[Document], ReadReport]:
    """Read line-delimited JSON documents.

    Malformed lines (bad JSON, missing fields, unparseable timestamps,
    empty text) are counted and skipped rather than aborting the run.
    """
    docs: list[Document] = []
    report = ReadReport()
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            if not line.strip():
                continue
            try:
                docs.append(_document_from_record(json.loads(line)))
            except ValueError:
                report.malformed += 1
                continue
            report.read += 1
    return docs, report


def write_documents(path, docs: Iterable[Document]) -> None:
    with atomic_write(path) as handle:
        for doc in docs:
            record = {
                "id": doc.doc_id,
                "author_id": doc.author_id,
                "user_name": doc.user_display_name,
                "timestamp": doc.timestamp.isoformat().replace("+00:00", "Z"),
                "text": doc.text,
            }
            handle.write(json.dumps(record, ensure_ascii=False) + "\n")


def write_annotation_tsv(path, docs: Sequence[Document]) -> None:
    """Export docs for spreadsheet annotation: doc_id, user, text."""
    with atomic_write(path) as handle:
        writer = csv.writer(handle, delimiter="\t", lineterminator="\n")
        writer.writerow(["doc_id", "user", "text"])
        for doc in docs:
            # Collapse internal whitespace so one document stays one row.
            writer.writerow(
                [doc.doc_id, doc.user_display_name, " ".join(doc.text.split())]
            )


def write_association_table(path, table: AssociationTable) -> None:
    """TSV sorted by score descending (ties broken by word)."""
    with atomic_write(path) as handle:
        writer = csv.writer(handle, delimiter="\t", lineterminator="\n")
        writer.writerow(["word", "score", "freq_target", "freq_reference", "smoothed"])
        ordered = sorted(table.entries.items(), key=lambda kv: (-kv[1].score, kv[0]))
        for word, entry in ordered:
            writer.writerow(
                [
                    word,
                    repr(entry.score),
                    entry.freq_target,
                    entry.freq_reference,
                    "true" if entry.smoothed else "false",
                ]
            )


def read_association_table(
    path, target_name: str = "target", reference_name: str = "reference"
) -> AssociationTable:
    entries: dict[str, AssocEntry] = {}
    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle, delimiter="\t")
        header = next(reader, None)
        if header is None:
            raise ValueError(f"{path}: empty association table")
        for row in reader:
            if not row:
                continue
            if len(row) != 5:
                raise ValueError(f"{path}: expected 5 columns, got {len(row)}")
            word, score, ft, fr, smoothed = row
            entries[word] = AssocEntry(
                float(score), int(ft), int(fr), smoothed.lower() == "true"
            )
    return AssociationTable(target_name, reference_name, entries)


def write_json(path, payload) -> None:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    with atomic_write(path) as handle:
        json.dump(payload, handle, indent=2, sort_keys=True, ensure_ascii=False)
        handle.write("\n")


def chi2_to_dict(result: Chi2Result) -> dict:
    return {
        "statistic": result.statistic,
        "degrees_of_freedom": result.degrees_of_freedom,
        "p_value": result.p_value,
    }


def emotion_profile_to_dict(profile: EmotionProfile) -> dict:
    return {
        "corpus": profile.corpus_name,
        "lexicon_token_count": profile.lexicon_token_count,
        "empty": profile.is_empty,
        "counts": dict(sorted(profile.label_counts.items())),
        "percentages": profile.percentages,
    }


def vad_profile_to_dict(profile: VadExtremesProfile) -> dict:
    return {
        "corpus": profile.corpus_name,
        "lexicon_token_count": profile.lexicon_token_count,
        "empty": profile.is_empty,
        "thresholds": {"low_max": profile.low_max, "high_min": profile.high_min},
        "counts": profile.counts,
        "percentages": profile.percentages,
    }


def age_profile_to_dict(profile: AgeProfile) -> dict:
    return {
        "corpus": profile.corpus_name,
        "lexicon_token_count": profile.lexicon_token_count,
        "empty": profile.is_empty,
        "counts": dict(sorted(profile.group_counts.items())),
        "percentages": profile.percentages,
    }


def write_profile_csv(path, profiles: Sequence, kind: str) -> None:
    """Plot-ready CSV for emotion/age ("label" rows) or VAD profiles."""
    with atomic_write(path) as handle:
        writer = csv.writer(handle, lineterminator="\n")
        if kind == "vad":
            writer.writerow(["corpus", "dimension", "class", "count", "percentage"])
            for profile in profiles:
                pct = profile.percentages
                for dim in VAD_DIMENSIONS:
                    for cls in ("low", "high"):
                        writer.writerow(
                            [
                                profile.corpus_name,
                                dim,
                                cls,
                                profile.counts[dim][cls],
                                repr(pct[dim][cls]),
                            ]
                        )
        else:
            writer.writerow(["corpus", "label", "count", "percentage"])
            for profile in profiles:
                counts = (
                    profile.label_counts
                    if isinstance(profile, EmotionProfile)
                    else profile.group_counts
                )
                pct = profile.percentages
                for label in sorted(pct):
                    writer.writerow(
                        [profile.corpus_name, label, counts.get(label, 0), repr(pct[label])]
                    )


def write_trend_csv(path, curve: TrendCurve) -> None:
    with atomic_write(path) as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["bin_center", "n_words", "mean_v", "mean_a", "mean_d"])
        for bin_ in curve.bins:
            writer.writerow(
                [
                    repr(bin_.center),
                    bin_.word_type_count,
                    repr(bin_.mean_valence),
                    repr(bin_.mean_arousal),
                    repr(bin_.mean_dominance),
                ]
            )


def trend_to_dict(curve: TrendCurve) -> dict:
    return {
        "step": curve.step,
        "min_words": curve.min_words,
        "bins": [
            {
                "center": bin_.center,
                "n_words": bin_.word_type_count,
                "mean_valence": bin_.mean_valence,
                "mean_arousal": bin_.mean_arousal,
                "mean_dominance": bin_.mean_dominance,
            }
            for bin_ in curve.bins
        ],
    }


def write_name_table(path, table: NameGenderTable) -> None:
    write_json(path, {"female": sorted(table.female), "male": sorted(table.male)})


def read_name_table(path) -> NameGenderTable:
    with open(path, encoding="utf-8") as handle:
        payload = json.load(handle)
    if not isinstance(payload, dict) or not {"female", "male"} <= payload.keys():
        raise ValueError(f"{path}: expected an object with 'female' and 'male' lists")
    return NameGenderTable(
        frozenset(str(name).lower() for name in payload["female"]),
        frozenset(str(name).lower() for name in payload["male"]),
    )
