#!/usr/bin/env python3
"""Independent oracle for the extractive summarizer.

Builds the two summarizer fixtures under data/fixtures/summary/ and computes
their expected outputs straight from the documented selection rules:

  * sentences split on [.?!]+ followed by whitespace/end, or a newline;
  * exact-duplicate sentences collapse to the first occurrence;
  * each sentence scored by the mean max-normalized document frequency of
    its content tokens (lowercased letters, stopwords removed);
  * rank by score desc then document order; greedily pack sentences whose
    word count still fits the max_words budget (skip and continue);
  * emit the picked sentences in document order, space-joined.

The C++ implementation is written against the same rules; its unit tests
compare against the .expected.txt files this script freezes. Rerunning the
script must be a no-op unless the rules themselves change.
"""
import collections
import pathlib
import re

ROOT = pathlib.Path(__file__).resolve().parent.parent
OUT = ROOT / "data" / "fixtures" / "summary"
MAX_WORDS = 120

STOPWORDS = set((ROOT / "data" / "stopwords_en.txt").read_text().split())


def split_sentences(text):
    pieces, start, i, n = [], 0, 0, len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            pieces.append(text[start:i])
            i += 1
            start = i
            continue
        if c in ".?!":
            j = i
            while j < n and text[j] in ".?!":
                j += 1
            if j >= n or text[j].isspace():
                pieces.append(text[start:j])
                start = j
            i = j
            continue
        i += 1
    pieces.append(text[start:])
    return [p.strip() for p in pieces if p.strip()]


def content_tokens(sentence):
    cleaned = re.sub(r"[^a-z]+", " ", sentence.lower())
    return [t for t in cleaned.split() if t not in STOPWORDS]


def summarize_pass(text, max_words=MAX_WORDS):
    sentences = split_sentences(text)
    seen, cands = set(), []
    for idx, s in enumerate(sentences):
        if s in seen:
            continue
        seen.add(s)
        cands.append((idx, s, content_tokens(s), len(s.split())))

    freq = collections.Counter(t for _, _, toks, _ in cands for t in toks)
    max_freq = max(freq.values(), default=0)

    def score(toks):
        if not toks or max_freq == 0:
            return 0.0
        return sum(freq[t] / max_freq for t in toks) / len(toks)

    ranked = sorted(range(len(cands)), key=lambda i: (-score(cands[i][2]), cands[i][0]))
    picked, used = [], 0
    for i in ranked:
        if used + cands[i][3] <= max_words:
            picked.append(i)
            used += cands[i][3]
    if not picked:
        picked = [ranked[0]]
    picked.sort(key=lambda i: cands[i][0])
    return " ".join(cands[i][1] for i in picked)


def build_dense3():
    theme = ["storm", "ocean", "sailor", "wave", "ship", "wind"]
    dense = []
    for rot in range(3):
        words = [theme[(k + rot) % len(theme)] for k in range(38)]
        dense.append(" ".join(words) + ".")
    syllables = ["ba", "de", "fi", "go", "ku", "lo", "mi", "na",
                 "pe", "ra", "su", "ta", "vo", "wi", "ze", "ki"]
    filler_words = [a + b for a in syllables for b in syllables]
    assert all(w not in STOPWORDS for w in filler_words + theme)
    fillers, w = [], 0
    for _ in range(12):
        sent = filler_words[w : w + 20]
        assert len(sent) == 20
        w += 20
        fillers.append(" ".join(sent) + ".")
    # dense sentences sit at positions 3, 8 and 12 of 15 (1-based)
    sentences = fillers[:2] + dense[:1] + fillers[2:6] + dense[1:2] + fillers[6:9] + dense[2:] + fillers[9:]
    assert len(sentences) == 15
    text = " ".join(sentences)
    # the fixture's whole point: the three dense sentences are the summary
    assert summarize_pass(text) == " ".join(dense)
    return text


def build_repeat30():
    return " ".join(["i cannot keep doing this anymore and nobody seems to notice."] * 30)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, builder in (("dense3", build_dense3), ("repeat30", build_repeat30)):
        text = builder()
        wc = len(text.split())
        assert wc >= 300, (name, wc)
        expected = summarize_pass(text)
        (OUT / f"{name}.txt").write_text(text + "\n")
        (OUT / f"{name}.expected.txt").write_text(expected + "\n")
        print(f"{name}: {wc} words -> {len(expected.split())} word summary")


if __name__ == "__main__":
    main()
