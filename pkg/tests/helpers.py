"""Shared fixtures-by-convention: document factories and the synthetic
dataset generator used by the CLI and acceptance tests."""

from __future__ import annotations

import json
import random
from datetime import datetime, timedelta, timezone

from corpuscontrast import Document

BASE_TS = datetime(2020, 1, 1, tzinfo=timezone.utc)

FEMALE_NAMES = [
    "mary", "linda", "susan", "karen", "nancy", "lisa", "betty", "sandra",
    "ashley", "emily", "donna", "carol", "ruth", "sharon", "laura", "sarah",
]
MALE_NAMES = [
    "james", "john", "robert", "michael", "william", "david", "richard",
    "joseph", "thomas", "charles", "daniel", "matthew", "anthony", "mark",
]


def make_doc(i, text, author=None, name="Some User", ts=None):
    return Document(
        doc_id=f"d{i:06d}",
        author_id=author if author is not None else f"u{i:06d}",
        user_display_name=name,
        timestamp=ts if ts is not None else BASE_TS + timedelta(minutes=i),
        text=text,
    )


def content_words(count=300):
    return [f"w{i:03d}" for i in range(count)]


def synth_documents(n, seed, query_words=("lonely", "solitude")):
    """Deterministic pseudo-tweet stream with duplicates, URLs, short
    texts, prolific authors, and gendered display names mixed in."""
    rng = random.Random(seed)
    vocab = content_words()
    docs = []
    texts = []
    for i in range(n):
        roll = rng.random()
        if roll < 0.02 and texts:
            text = rng.choice(texts)  # exact duplicate
        elif roll < 0.05:
            text = " ".join(rng.sample(vocab, 2))  # too short
        elif roll < 0.08:
            text = f"{rng.choice(vocab)} {rng.choice(vocab)} more at http://example.com/{i}"
        else:
            words = rng.sample(vocab, rng.randint(4, 11))
            if rng.random() < 0.6:
                words.insert(rng.randrange(len(words)), rng.choice(query_words))
            text = " ".join(words)
        texts.append(text)
        gender_roll = rng.random()
        if gender_roll < 0.35:
            display = rng.choice(FEMALE_NAMES).title() + " T."
        elif gender_roll < 0.7:
            display = rng.choice(MALE_NAMES).title() + "_99"
        else:
            display = f"xx{rng.randrange(10_000)}"
        docs.append(
            make_doc(
                i,
                text,
                author=f"a{rng.randrange(max(2, n // 3)):06d}",
                name=display,
                ts=BASE_TS + timedelta(seconds=i),
            )
        )
    return docs


def write_jsonl(path, docs):
    with open(path, "w", encoding="utf-8") as handle:
        for doc in docs:
            handle.write(
                json.dumps(
                    {
                        "id": doc.doc_id,
                        "author_id": doc.author_id,
                        "user_name": doc.user_display_name,
                        "timestamp": doc.timestamp.isoformat().replace("+00:00", "Z"),
                        "text": doc.text,
                    }
                )
                + "\n"
            )


def write_emotion_lexicon(path, words=None, seed=11):
    """Flat word TAB emotion TAB flag file over the synthetic vocabulary."""
    labels = [
        "anger", "anticipation", "disgust", "fear", "joy",
        "sadness", "surprise", "trust", "positive", "negative",
    ]
    rng = random.Random(seed)
    words = list(words) if words is not None else content_words() + ["lonely", "solitude"]
    with open(path, "w", encoding="utf-8") as handle:
        for word in words:
            for label in labels:
                flag = 1 if rng.random() < 0.2 else 0
                handle.write(f"{word}\t{label}\t{flag}\n")


def write_vad_lexicon(path, words=None, seed=13):
    rng = random.Random(seed)
    words = list(words) if words is not None else content_words() + ["lonely", "solitude"]
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("word\tvalence\tarousal\tdominance\n")
        for word in words:
            v, a, d = (round(rng.random(), 4) for _ in range(3))
            handle.write(f"{word}\t{v}\t{a}\t{d}\n")


def write_age_lexicon(path, words=None, seed=17):
    groups = ["13to18", "19to22", "23to29", "30plus"]
    rng = random.Random(seed)
    words = list(words) if words is not None else content_words()
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("term,group,score,pvalue\n")
        for word in words:
            for group in groups:
                score = round(rng.uniform(-0.5, 0.5), 3)
                p = round(rng.uniform(0.001, 0.2), 4)
                handle.write(f"{word},{group},{score},{p}\n")


def write_names_json(path):
    with open(path, "w", encoding="utf-8") as handle:
        json.dump({"female": FEMALE_NAMES, "male": MALE_NAMES}, handle)
