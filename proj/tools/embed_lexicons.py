#!/usr/bin/env python3
"""Regenerate include/sentinel/lexicon_data.hpp from the data/ lexicon files.

The .txt files under data/ are the source of truth; the generated header is
what the library compiles in so binaries work without a data directory. A
unit test asserts the two stay in sync -- rerun this script after editing
any lexicon file.
"""
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
FILES = [
    ("kStopwordsText", "stopwords_en.txt"),
    ("kLemmaExceptionsText", "lemma_exceptions_en.txt"),
    ("kWordlistText", "wordlist_en.txt"),
]

def main():
    out = []
    out.append("#pragma once\n")
    out.append("// GENERATED by tools/embed_lexicons.py from data/*.txt -- do not edit.\n")
    out.append("// The data files remain authoritative; a test checks for drift.\n\n")
    out.append("namespace sentinel::lexicon_data {\n\n")
    for symbol, fname in FILES:
        text = (ROOT / "data" / fname).read_text(encoding="ascii")
        if ")lex(" in text:
            raise SystemExit(f"{fname}: collides with raw-string delimiter")
        out.append(f"// data/{fname}\n")
        out.append(f'inline constexpr const char* {symbol} = R"lex({text})lex";\n\n')
    out.append("}  // namespace sentinel::lexicon_data\n")
    target = ROOT / "include" / "sentinel" / "lexicon_data.hpp"
    target.write_text("".join(out), encoding="ascii")
    print(f"wrote {target}")

if __name__ == "__main__":
    main()
