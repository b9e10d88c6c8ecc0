#!/usr/bin/env python3
"""Regenerates data/fixtures/corpus_500.csv and data/fixtures/raw/*.csv.

corpus_500.csv is a balanced 500-record processed-table fixture for baseline
learnability tests: label 1 rows always contain the token "die", label 0 rows
never do, so a linear model must separate them perfectly while shuffled labels
cannot.

data/fixtures/raw/ carries the same kind of synthetic records in the native
schema of each of the six sources (500 kept rows total, 250 per class, plus a
handful of rows the ingest gates must discard), so the full command-line chain
can run end to end without any real dataset. Deterministic output; run from
the repo root.
"""

import csv
import random

BACKGROUND = [
    "night", "sleep", "work", "school", "friend", "family", "music", "game",
    "walk", "coffee", "movie", "book", "rain", "summer", "week", "morning",
    "dinner", "road", "city", "dog", "cat", "team", "song", "story", "plan",
    "call", "house", "garden", "train", "beach", "letter", "photo", "class",
    "test", "shift", "break", "lunch", "ride", "park", "show",
]

POSITIVE_EXTRA = ["anymore", "alone", "tired", "pain", "end", "goodbye"]
NEGATIVE_EXTRA = ["great", "fun", "excited", "happy", "weekend", "relax"]


def make_tokens(rng, positive):
    n = rng.randint(4, 9)
    pool = BACKGROUND + (POSITIVE_EXTRA if positive else NEGATIVE_EXTRA)
    tokens = [rng.choice(pool) for _ in range(n)]
    if positive:
        # two-to-three marker mentions keep the margin comfortable after
        # per-document L2 normalization dilutes any single token
        for _ in range(rng.randint(2, 3)):
            tokens.insert(rng.randrange(len(tokens) + 1), "die")
    assert ("die" in tokens) == positive
    return tokens


def make_row(rng, positive):
    cleaned = " ".join(make_tokens(rng, positive))
    return {"text": cleaned, "summary": cleaned, "cleaned": cleaned,
            "label": "1" if positive else "0"}


def make_raw_text(rng, positive):
    """Raw-post rendition: capitalization, punctuation, and junk the cleaning
    stage must strip (URLs, digits, stray symbols) without touching the
    marker vocabulary."""
    tokens = make_tokens(rng, positive)
    text = " ".join(tokens).capitalize()
    roll = rng.random()
    if roll < 0.25:
        text += " https://example.com/p/" + str(rng.randint(100, 999))
    elif roll < 0.5:
        text += " " + str(rng.randint(2, 99)) + "!!"
    elif roll < 0.75:
        text = text.replace(" ", "  ", 1) + "..."
    else:
        text += "."
    return text


def write_csv(path, fieldnames, rows):
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=fieldnames, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)


def make_raw_sources(rng):
    def texts(n, positive):
        return [make_raw_text(rng, positive) for _ in range(n)]

    tda = []
    for i, t in enumerate(texts(40, True)):
        tda.append({"Post": t, "Label": ["Attempt", "Ideation"][i % 2]})
    for i, t in enumerate(texts(40, False)):
        tda.append({"Post": t, "Label": ["Supportive", "Behavior", "Indicator"][i % 3]})
    rng.shuffle(tda)
    write_csv("data/fixtures/raw/tda.csv", ["Post", "Label"], tda)

    ag = []
    for t in texts(42, True):
        ag.append({"Post": t, "Suicidal_Label": "0",
                   "Sentiment_Label": str(rng.randint(0, 2))})
    for t in texts(42, False):
        ag.append({"Post": t, "Suicidal_Label": "1",
                   "Sentiment_Label": str(rng.randint(0, 2))})
    rng.shuffle(ag)
    write_csv("data/fixtures/raw/ag.csv", ["Post", "Suicidal_Label", "Sentiment_Label"], ag)

    ims = []
    for t in texts(42, True):
        ims.append({"Post": t, "Label": "Suicidal"})
    for t in texts(42, False):
        ims.append({"Post": t, "Label": "Non-Suicidal"})
    rng.shuffle(ims)
    write_csv("data/fixtures/raw/ims.csv", ["Post", "Label"], ims)

    lax = []
    for t in texts(42, True):
        lax.append({"tweet": t, "intention": "1"})
    for t in texts(42, False):
        lax.append({"tweet": t, "intention": "0"})
    rng.shuffle(lax)
    write_csv("data/fixtures/raw/lax.csv", ["tweet", "intention"], lax)

    msh = [{"text": t} for t in texts(42, True)]
    write_csv("data/fixtures/raw/msh.csv", ["text"], msh)

    ntl = []
    for i, t in enumerate(texts(42, True)):
        ntl.append({"full_text": t, "label": ["0", "1"][i % 2], "lang": "en"})
    for i, t in enumerate(texts(84, False)):
        ntl.append({"full_text": t, "label": ["2", "4"][i % 2], "lang": "en"})
    # rows the gates must drop: wrong language, and the annotator-disagreement bucket
    ntl.append({"full_text": make_raw_text(rng, True), "label": "0", "lang": "es"})
    ntl.append({"full_text": make_raw_text(rng, False), "label": "2", "lang": "fr"})
    ntl.append({"full_text": make_raw_text(rng, True), "label": "3", "lang": "en"})
    ntl.append({"full_text": make_raw_text(rng, False), "label": "3", "lang": "en"})
    rng.shuffle(ntl)
    write_csv("data/fixtures/raw/ntl.csv", ["full_text", "label", "lang"], ntl)


def main():
    rng = random.Random(20260815)
    rows = [make_row(rng, i % 2 == 1) for i in range(500)]
    with open("data/fixtures/corpus_500.csv", "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=["text", "summary", "cleaned", "label"],
                           lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    print(f"wrote {len(rows)} rows")

    make_raw_sources(random.Random(20260816))
    print("wrote raw source fixtures")


if __name__ == "__main__":
    main()
