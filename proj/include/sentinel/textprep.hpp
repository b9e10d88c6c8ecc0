#pragma once

// Text cleaning and lexical normalization: raw post text in, the "cleaned"
// column out. clean_text applies a fixed-order scrub (accent fold, lowercase,
// URL strip, non-letter strip, whitespace collapse, lengthening collapse,
// optional spell fix); tokens then pass through stopword removal and either
// lemmatization or stemming.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sentinel/common.hpp"
#include "sentinel/lexicon.hpp"
#include "sentinel/porter.hpp"
#include "sentinel/records.hpp"
#include "sentinel/unicode_fold.hpp"

namespace sentinel {

enum class LexicalMode { LEMMATIZE, STEM };

struct CleanConfig {
  std::unordered_set<std::string> stopword_list = default_lexicons().stopwords;
  LexicalMode lexical_mode = LexicalMode::LEMMATIZE;
  bool spell_fix = false;
  int lengthening_collapse_run = 2;
  // Lexical resources for lemmatization and spell correction. Never null.
  const Lexicons* lexicons = &default_lexicons();
  // Optional corpus frequencies used to break spell-correction ties; ties
  // fall back to lexicographic order when absent.
  const std::unordered_map<std::string, uint64_t>* spell_frequencies = nullptr;
};

namespace textprep_detail {

// True for tokens we treat as URLs: anything with a scheme separator, or a
// www.-prefixed host (after skipping leading punctuation like an opening
// parenthesis). "awww..." stays; "(https://t.co/x)" goes.
inline bool is_url_token(std::string_view tok) {
  if (tok.find("://") != std::string_view::npos) return true;
  size_t start = 0;
  while (start < tok.size() && !(std::isalnum(static_cast<unsigned char>(tok[start])))) ++start;
  return tok.compare(start, 4, "www.") == 0;
}

// Collapses every same-letter run longer than limit down to limit
// characters. Returns true if anything was shortened.
inline bool clamp_runs(const std::string& in, int limit, std::string& out) {
  out.clear();
  bool changed = false;
  size_t i = 0;
  while (i < in.size()) {
    size_t j = i;
    while (j < in.size() && in[j] == in[i]) ++j;
    size_t run = j - i;
    size_t keep = std::min(run, static_cast<size_t>(limit));
    if (keep != run) changed = true;
    out.append(keep, in[i]);
    i = j;
  }
  return changed;
}

// Same, but over-limit runs collapse all the way to a single letter; runs
// already within the limit are left alone.
inline std::string collapse_runs_to_one(const std::string& in, int limit) {
  std::string out;
  size_t i = 0;
  while (i < in.size()) {
    size_t j = i;
    while (j < in.size() && in[j] == in[i]) ++j;
    size_t run = j - i;
    out.append(run > static_cast<size_t>(limit) ? 1 : run, in[i]);
    i = j;
  }
  return out;
}

// Spell-lexicon membership. Stopwords count as known words: they are valid
// English even though they are not content vocabulary, and "correcting" them
// into content words would invent meaning.
inline bool in_spell_lexicon(const std::string& w, const CleanConfig& cfg) {
  return cfg.lexicons->wordlist.count(w) > 0 || cfg.stopword_list.count(w) > 0;
}

// All spell-lexicon words within edit distance 1 of token (insert, delete,
// substitute, adjacent transpose).
inline std::vector<std::string> edit1_candidates(const std::string& token,
                                                 const CleanConfig& cfg) {
  std::unordered_set<std::string> seen;
  std::vector<std::string> out;
  auto consider = [&](const std::string& w) {
    if (w != token && in_spell_lexicon(w, cfg) && seen.insert(w).second) out.push_back(w);
  };
  for (size_t i = 0; i < token.size(); ++i) {
    std::string del = token.substr(0, i) + token.substr(i + 1);
    consider(del);
    if (i + 1 < token.size()) {
      std::string tr = token;
      std::swap(tr[i], tr[i + 1]);
      consider(tr);
    }
    for (char c = 'a'; c <= 'z'; ++c) {
      std::string sub = token;
      sub[i] = c;
      consider(sub);
    }
  }
  for (size_t i = 0; i <= token.size(); ++i) {
    for (char c = 'a'; c <= 'z'; ++c) {
      std::string ins = token.substr(0, i) + c + token.substr(i);
      consider(ins);
    }
  }
  return out;
}

inline std::string spell_correct(const std::string& token, const CleanConfig& cfg) {
  if (in_spell_lexicon(token, cfg)) return token;
  auto cands = edit1_candidates(token, cfg);
  if (cands.empty()) return token;
  auto freq = [&](const std::string& w) -> uint64_t {
    if (!cfg.spell_frequencies) return 0;
    auto it = cfg.spell_frequencies->find(w);
    return it == cfg.spell_frequencies->end() ? 0 : it->second;
  };
  std::sort(cands.begin(), cands.end(), [&](const std::string& a, const std::string& b) {
    uint64_t fa = freq(a), fb = freq(b);
    if (fa != fb) return fa > fb;
    return a < b;
  });
  return cands.front();
}

}  // namespace textprep_detail

// Fixed-order scrub from raw text to lowercase letters and single spaces.
inline std::string clean_text(std::string_view text, const CleanConfig& config = {}) {
  // (1) accent folding, (2) lowercasing
  std::string s = fold_to_ascii(text);
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  // (3) URL removal on whitespace-delimited tokens
  {
    std::string kept;
    size_t i = 0;
    while (i < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[i]))) {
        kept += ' ';
        ++i;
        continue;
      }
      size_t j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
      std::string_view tok(s.data() + i, j - i);
      if (!textprep_detail::is_url_token(tok)) kept.append(tok);
      i = j;
    }
    s = std::move(kept);
  }

  // (4) every non-letter becomes a space
  for (char& c : s)
    if (c < 'a' || c > 'z') c = ' ';

  // (5) collapse whitespace, trim; work tokenwise from here on
  std::vector<std::string> tokens = split_ws(s);

  // (6) lengthening collapse
  for (std::string& tok : tokens) {
    std::string clamped;
    if (!textprep_detail::clamp_runs(tok, config.lengthening_collapse_run, clamped)) continue;
    if (config.spell_fix && !textprep_detail::in_spell_lexicon(clamped, config))
      clamped = textprep_detail::collapse_runs_to_one(tok, config.lengthening_collapse_run);
    tok = std::move(clamped);
  }

  // (7) optional edit-distance-1 spelling fix
  if (config.spell_fix)
    for (std::string& tok : tokens) tok = textprep_detail::spell_correct(tok, config);

  return join(tokens, " ");
}

// Splits cleaned text (letters and single spaces) into tokens.
inline std::vector<std::string> tokenize(std::string_view text) {
  return split_ws(text);
}

// Order-preserving stopword drop.
inline std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                                 const CleanConfig& config) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens)
    if (!config.stopword_list.count(t)) out.push_back(t);
  return out;
}

// Dictionary lemmatizer: irregular-form lookup, then a short-circuit for
// words already in base form, then ordered suffix rules validated against
// the wordlist. Unknown shapes come back unchanged.
inline std::string lemmatize_token(const std::string& token,
                                   const Lexicons& lex = default_lexicons()) {
  if (auto it = lex.lemma_exceptions.find(token); it != lex.lemma_exceptions.end())
    return it->second;
  if (lex.wordlist.count(token)) return token;

  const auto known = [&](const std::string& w) { return lex.wordlist.count(w) > 0; };
  const size_t n = token.size();
  auto ends = [&](std::string_view suf) {
    return n >= suf.size() && token.compare(n - suf.size(), suf.size(), suf) == 0;
  };
  auto stem = [&](size_t strip) { return token.substr(0, n - strip); };

  // Plural endings.
  if (ends("ies") && n >= 5) {
    if (std::string w = stem(3) + "y"; known(w)) return w;
  }
  if (ends("ves") && n >= 5) {
    if (std::string w = stem(3) + "f"; known(w)) return w;
    if (std::string w = stem(3) + "fe"; known(w)) return w;
  }
  if (ends("men") && n >= 5) {
    if (std::string w = stem(3) + "man"; known(w)) return w;
  }
  if (ends("es") && n >= 4) {
    if (std::string w = stem(2); known(w)) return w;
  }
  if (ends("s") && !ends("ss") && !ends("us") && !ends("is") && n >= 4) {
    if (std::string w = stem(1); known(w)) return w;
  }
  // Past tense.
  if (ends("ied") && n >= 5) {
    if (std::string w = stem(3) + "y"; known(w)) return w;
  }
  if (ends("ed") && n >= 4) {
    if (std::string w = stem(2); known(w)) return w;
    if (std::string w = stem(2) + "e"; known(w)) return w;
    // doubled final consonant: stopped -> stop
    std::string core = stem(2);
    if (core.size() >= 3 && core[core.size() - 1] == core[core.size() - 2]) {
      if (std::string w = core.substr(0, core.size() - 1); known(w)) return w;
    }
  }
  // Progressive.
  if (ends("ing") && n >= 5) {
    std::string core = stem(3);
    if (core.size() >= 2 && known(core)) return core;
    if (std::string w = core + "e"; known(w)) return w;
    if (core.size() >= 3 && core[core.size() - 1] == core[core.size() - 2]) {
      if (std::string w = core.substr(0, core.size() - 1); known(w)) return w;
    }
  }
  return token;
}

// stem_token (the STEM lexical mode) is provided by porter.hpp.

// One fully processed corpus row.
struct ProcessedRecord {
  std::string text;     // original post text
  std::string summary;  // equals text when no summarization applied
  std::string cleaned;  // space-joined normalized tokens
  int label = 0;
  bool empty_cleaned = false;  // data-quality flag, not a failure
};

// Normalization pipeline on a bare string: clean, tokenize, drop stopwords,
// lemmatize or stem, rejoin.
inline std::string normalize_text(const std::string& text, const CleanConfig& config = {}) {
  std::vector<std::string> tokens = remove_stopwords(tokenize(clean_text(text, config)), config);
  for (std::string& t : tokens)
    t = config.lexical_mode == LexicalMode::LEMMATIZE ? lemmatize_token(t, *config.lexicons)
                                                      : stem_token(t);
  // Normalization can map a surviving token back onto a stopword ("doing" ->
  // "do"); the cleaned column must stay stopword-free, so filter once more.
  tokens = remove_stopwords(tokens, config);
  return join(tokens, " ");
}

// Full normalization of one harmonized record given its (possibly identical)
// summary.
inline ProcessedRecord normalize_record(const HarmonizedRecord& record, const std::string& summary,
                                        const CleanConfig& config = {}) {
  ProcessedRecord out;
  out.text = record.text;
  out.summary = summary;
  out.label = record.label;
  out.cleaned = normalize_text(summary, config);
  out.empty_cleaned = out.cleaned.empty();
  return out;
}

}  // namespace sentinel
