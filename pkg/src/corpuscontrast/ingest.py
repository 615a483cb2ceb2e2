"""Corpus-construction pipeline for query-filtered document streams.

Stage order is fixed so drop statistics are well-defined:
query match -> duplicate removal -> URL/length filters -> per-user cap.
The stream is normalized to (timestamp, doc_id) order first, which makes
the whole pipeline invariant under input permutation.
"""

from __future__ import annotations

import hashlib
import random
import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .corpus import URL_RE, Corpus, Document, build_corpus, tokenize

DROP_REASONS = ("no_query_match", "duplicate", "too_short", "has_url", "over_cap")


@dataclass(frozen=True)
class PipelineConfig:
    min_tokens: int = 3
    per_user_cap: int = 3
    query_terms: frozenset[str] | None = None
    drop_urls: bool = True

    def __post_init__(self):
        if self.min_tokens < 1:
            raise ValueError("min_tokens must be >= 1")
        if self.per_user_cap < 1:
            raise ValueError("per_user_cap must be >= 1")


@dataclass
class PipelineStats:
    """Documents kept and dropped per reason; totals reconcile with input."""

    kept: int = 0
    dropped: dict[str, int] = field(
        default_factory=lambda: {reason: 0 for reason in DROP_REASONS}
    )

    @property
    def input_count(self) -> int:
        return self.kept + sum(self.dropped.values())


class SampleShortfallWarning(UserWarning):
    """Requested sample size exceeds the population."""


def matches_query(doc: Document, terms: frozenset[str] | set[str]) -> bool:
    """True iff the tokenized text contains at least one query term.

    Exact token match only; substrings ("loneliness" vs "lonely") do not
    count.
    """
    return not terms.isdisjoint(tokenize(doc.text))


def passes_filters(doc: Document, cfg: PipelineConfig) -> tuple[bool, str | None]:
    """URL and length filters. Returns (passed, drop_reason).

    The URL check runs first: a URL-bearing text that is also short after
    URL removal is attributed to has_url.
    """
    if cfg.drop_urls and URL_RE.search(doc.text):
        return False, "has_url"
    if len(tokenize(doc.text)) < cfg.min_tokens:
        return False, "too_short"
    return True, None


def cap_per_user(docs: Sequence[Document], k: int) -> list[Document]:
    """Keep each author's first k documents by (timestamp, doc_id)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    kept_per_author: dict[str, int] = defaultdict(int)
    kept = []
    for doc in sorted(docs, key=lambda d: d.sort_key):
        if kept_per_author[doc.author_id] < k:
            kept_per_author[doc.author_id] += 1
            kept.append(doc)
    return kept


def _dedup_key(text: str) -> bytes:
    # Exact match on casefolded, whitespace-collapsed text. Hash digests
    # keep the seen-set memory bounded on multi-million-document streams.
    normalized = " ".join(text.casefold().split())
    return hashlib.blake2b(normalized.encode("utf-8"), digest_size=16).digest()


def filter_documents(
    raw: Iterable[Document], cfg: PipelineConfig
) -> tuple[list[Document], PipelineStats]:
    """Apply the pipeline stages, returning survivors in canonical order."""
    stats = PipelineStats()
    docs = sorted(raw, key=lambda d: d.sort_key)

    if cfg.query_terms:
        matched = []
        for doc in docs:
            if matches_query(doc, cfg.query_terms):
                matched.append(doc)
            else:
                stats.dropped["no_query_match"] += 1
        docs = matched

    seen: set[bytes] = set()
    unique = []
    for doc in docs:
        key = _dedup_key(doc.text)
        if key in seen:
            stats.dropped["duplicate"] += 1
        else:
            seen.add(key)
            unique.append(doc)

    filtered = []
    for doc in unique:
        passed, reason = passes_filters(doc, cfg)
        if passed:
            filtered.append(doc)
        else:
            stats.dropped[reason] += 1

    survivors = cap_per_user(filtered, cfg.per_user_cap)
    stats.dropped["over_cap"] = len(filtered) - len(survivors)
    stats.kept = len(survivors)
    return survivors, stats


def run_pipeline(
    raw: Iterable[Document],
    cfg: PipelineConfig,
    name: str | None = None,
    workers: int = 1,
) -> tuple[Corpus, PipelineStats]:
    """Filter a document stream and count the survivors into a Corpus."""
    survivors, stats = filter_documents(raw, cfg)
    if name is None:
        name = "+".join(sorted(cfg.query_terms)) if cfg.query_terms else "all"
    corpus = build_corpus(name, survivors, workers=workers)
    return corpus, stats


def sample_for_annotation(
    docs: Sequence[Document], n: int, seed: int
) -> list[Document]:
    """Uniform sample without replacement, reproducible from the seed.

    Population order is normalized internally, so the same seed gives the
    same sample regardless of how the caller ordered docs. If n exceeds
    the population, all documents are returned and a shortfall warning is
    issued.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    population = sorted(docs, key=lambda d: d.sort_key)
    if n >= len(population):
        if n > len(population):
            warnings.warn(
                f"requested {n} documents but only {len(population)} available",
                SampleShortfallWarning,
                stacklevel=2,
            )
        return population
    return random.Random(seed).sample(population, n)
