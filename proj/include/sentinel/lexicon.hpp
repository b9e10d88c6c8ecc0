#pragma once

// Lexical resources backing normalization: stopword list, irregular-form
// lemma exceptions, and a base-form wordlist used both to validate suffix
// stripping and as the dictionary for optional spell correction. Defaults
// are compiled in; all three can be overridden from files of the same
// line-oriented format.

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "sentinel/common.hpp"
#include "sentinel/lexicon_data.hpp"

namespace sentinel {

struct Lexicons {
  std::unordered_set<std::string> stopwords;
  std::unordered_map<std::string, std::string> lemma_exceptions;
  std::unordered_set<std::string> wordlist;
};

namespace detail {

inline void parse_word_lines(std::string_view text, std::unordered_set<std::string>& out) {
  for (auto& line : split(std::string(text), '\n')) {
    std::string w = trim(line);
    if (!w.empty() && w[0] != '#') out.insert(std::move(w));
  }
}

inline void parse_pair_lines(std::string_view text,
                             std::unordered_map<std::string, std::string>& out) {
  for (auto& line : split(std::string(text), '\n')) {
    std::string l = trim(line);
    if (l.empty() || l[0] == '#') continue;
    auto parts = split_ws(l);
    if (parts.size() != 2)
      throw contract_error("lemma exception line must be 'form lemma': '" + l + "'");
    out[parts[0]] = parts[1];
  }
}

}  // namespace detail

// The compiled-in lexicons. Built once, shared after.
inline const Lexicons& default_lexicons() {
  static const Lexicons lex = [] {
    Lexicons l;
    detail::parse_word_lines(lexicon_data::kStopwordsText, l.stopwords);
    detail::parse_pair_lines(lexicon_data::kLemmaExceptionsText, l.lemma_exceptions);
    detail::parse_word_lines(lexicon_data::kWordlistText, l.wordlist);
    return l;
  }();
  return lex;
}

// Loads the same three resources from a directory holding stopwords_en.txt,
// lemma_exceptions_en.txt and wordlist_en.txt. Any missing file falls back
// to the compiled-in copy.
inline Lexicons load_lexicons(const std::string& dir) {
  Lexicons l;
  auto path = [&](const char* name) { return dir + "/" + name; };
  if (file_exists(path("stopwords_en.txt")))
    detail::parse_word_lines(read_file(path("stopwords_en.txt")), l.stopwords);
  else
    l.stopwords = default_lexicons().stopwords;
  if (file_exists(path("lemma_exceptions_en.txt")))
    detail::parse_pair_lines(read_file(path("lemma_exceptions_en.txt")), l.lemma_exceptions);
  else
    l.lemma_exceptions = default_lexicons().lemma_exceptions;
  if (file_exists(path("wordlist_en.txt")))
    detail::parse_word_lines(read_file(path("wordlist_en.txt")), l.wordlist);
  else
    l.wordlist = default_lexicons().wordlist;
  return l;
}

}  // namespace sentinel
