"""Documents, tweet-style tokenization, and frequency-counted corpora."""

from __future__ import annotations

import re
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Iterable, Sequence

# URL shape shared by the tokenizer (drop the chunk) and the ingest filter
# (reject the whole document): scheme://... or www.-prefixed hosts.
URL_RE = re.compile(r"(?:\b[a-z][a-z0-9+.-]*://|\bwww\.\w)", re.IGNORECASE)

# A token is a run of letters/digits, optionally chained by internal
# apostrophes ("don't", "rock'n'roll"). Underscore is a separator.
_TOKEN_RE = re.compile(r"[^\W_]+(?:'[^\W_]+)*", re.UNICODE)


class DuplicateDocumentError(ValueError):
    """Two documents in one collection share a doc_id."""


@dataclass(frozen=True, slots=True)
class Document:
    """One text item (e.g. a tweet) with author and time identity."""

    doc_id: str
    author_id: str
    user_display_name: str
    timestamp: datetime
    text: str

    def __post_init__(self):
        if not self.text.strip():
            raise ValueError(f"document {self.doc_id!r}: text is empty")

    @property
    def sort_key(self) -> tuple[datetime, str]:
        """Canonical stream order used everywhere a global order matters."""
        return (self.timestamp, self.doc_id)


def parse_timestamp(value: str) -> datetime:
    """Parse an RFC 3339 timestamp to an aware UTC datetime."""
    # 3.10's fromisoformat does not accept the 'Z' suffix.
    if value.endswith(("Z", "z")):
        value = value[:-1] + "+00:00"
    ts = datetime.fromisoformat(value)
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc)


def tokenize(text: str) -> list[str]:
    """Split text into lowercase tokens.

    Policy (fixed so lexicon joins stay consistent across the toolkit):
      - lowercase everything
      - whitespace chunks shaped like URLs (scheme:// or www.) are dropped
      - @-mentions are dropped
      - hashtags keep the body without '#'
      - everything else splits on any character that is not a letter,
        digit, or internal apostrophe
    """
    tokens: list[str] = []
    # Curly apostrophes are rampant in tweets; fold them so "don’t" and
    # "don't" count as the same token.
    for chunk in text.replace("’", "'").lower().split():
        if chunk.startswith("@"):
            continue
        if URL_RE.match(chunk):
            continue
        if chunk.startswith("#"):
            chunk = chunk.lstrip("#")
        tokens.extend(_TOKEN_RE.findall(chunk))
    return tokens


@dataclass(frozen=True)
class Corpus:
    """Immutable token-frequency view over a set of documents.

    freq holds strictly positive occurrence counts; total_tokens is their
    sum. Treat instances as read-only after construction.
    """

    name: str
    doc_count: int
    freq: dict[str, int] = field(default_factory=dict)
    total_tokens: int = 0

    def frequency(self, word: str) -> int:
        return self.freq.get(word, 0)

    def vocabulary(self) -> set[str]:
        return set(self.freq)


def _count_tokens(docs: Sequence[Document]) -> Counter:
    counts: Counter = Counter()
    for doc in docs:
        counts.update(tokenize(doc.text))
    return counts


def build_corpus(name: str, docs: Sequence[Document], workers: int = 1) -> Corpus:
    """Count token occurrences over docs into a Corpus.

    Counting may shard across threads (workers > 1); the merge is
    commutative, so the result is independent of document order and of
    the worker count.
    """
    seen_ids: set[str] = set()
    for doc in docs:
        if doc.doc_id in seen_ids:
            raise DuplicateDocumentError(f"duplicate doc_id {doc.doc_id!r}")
        seen_ids.add(doc.doc_id)

    if workers > 1 and len(docs) > 1:
        shard = max(1, -(-len(docs) // workers))
        chunks = [docs[i : i + shard] for i in range(0, len(docs), shard)]
        counts: Counter = Counter()
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for partial in pool.map(_count_tokens, chunks):
                counts.update(partial)
    else:
        counts = _count_tokens(docs)

    return Corpus(
        name=name,
        doc_count=len(docs),
        freq=dict(counts),
        total_tokens=sum(counts.values()),
    )


def merge_corpora(name: str, corpora: Iterable[Corpus]) -> Corpus:
    """Union of corpora: counts add, doc counts add."""
    counts: Counter = Counter()
    doc_count = 0
    for corpus in corpora:
        counts.update(corpus.freq)
        doc_count += corpus.doc_count
    return Corpus(
        name=name,
        doc_count=doc_count,
        freq=dict(counts),
        total_tokens=sum(counts.values()),
    )
