#pragma once

// Recursive extractive summarizer. Posts of 300+ words are condensed into a
// 50-120 word band before normalization: sentences are scored by mean
// max-normalized content-token frequency and greedily packed, in document
// order, under the word budget. A deterministic, dependency-free stand-in
// for "a summarizer" -- the interface leaves room for a smarter backend.

#include <algorithm>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sentinel/common.hpp"
#include "sentinel/textprep.hpp"

namespace sentinel {

struct SummaryConfig {
  int trigger_words = 300;
  int min_words = 50;
  int max_words = 120;
  int max_depth = 5;

  void validate() const {
    if (!(0 < min_words && min_words <= max_words && max_words < trigger_words))
      throw contract_error("summary config requires 0 < min_words <= max_words < trigger_words");
    if (max_depth < 0) throw contract_error("summary config requires max_depth >= 0");
  }
};

// Whitespace-delimited token count.
inline int word_count(std::string_view text) {
  return static_cast<int>(split_ws(text).size());
}

// Naive sentence boundaries: a run of [.?!] followed by whitespace (or end
// of text), or a newline. Sentences keep their terminal punctuation and are
// trimmed; empty pieces are dropped. Social-media text with no boundary at
// all comes back as a single sentence.
inline std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  size_t start = 0;
  auto flush = [&](size_t end) {
    std::string s = trim(text.substr(start, end - start));
    if (!s.empty()) out.push_back(std::move(s));
  };
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      flush(i);
      start = ++i;
      continue;
    }
    if (c == '.' || c == '?' || c == '!') {
      size_t j = i;
      while (j < text.size() && (text[j] == '.' || text[j] == '?' || text[j] == '!')) ++j;
      if (j >= text.size() || std::isspace(static_cast<unsigned char>(text[j]))) {
        flush(j);
        start = j;
        i = j;
        continue;
      }
      i = j;  // punctuation inside a token ("e.g.x") is not a boundary
      continue;
    }
    ++i;
  }
  flush(text.size());
  return out;
}

namespace summarize_detail {

struct ScoredSentence {
  std::string text;
  size_t index = 0;
  double score = 0.0;
  int words = 0;
};

// Content tokens of a sentence: cleaned, stopwords out, no lemmatization --
// scoring should reward surface-frequency, not lexical families.
inline std::vector<std::string> content_tokens(const std::string& sentence,
                                               const CleanConfig& cfg) {
  return remove_stopwords(tokenize(clean_text(sentence, cfg)), cfg);
}

// One unchecked condensation pass shared by summarize_once (which enforces
// the trigger precondition) and the recursion (which legitimately re-enters
// below the trigger).
inline std::string summarize_pass(const std::string& text, const SummaryConfig& config) {
  const CleanConfig clean_cfg;  // shipped defaults; spell_fix off
  std::vector<std::string> sentences = split_sentences(text);
  if (sentences.empty()) return text;

  // exact-duplicate sentences collapse to their first occurrence
  std::unordered_set<std::string> seen;
  std::vector<ScoredSentence> cands;
  std::vector<std::vector<std::string>> cand_tokens;
  for (size_t i = 0; i < sentences.size(); ++i) {
    if (!seen.insert(sentences[i]).second) continue;
    ScoredSentence s;
    s.text = sentences[i];
    s.index = i;
    s.words = word_count(s.text);
    cand_tokens.push_back(content_tokens(s.text, clean_cfg));
    cands.push_back(std::move(s));
  }

  // document-wide content-token frequencies, normalized by the max
  std::unordered_map<std::string, int> freq;
  for (const auto& toks : cand_tokens)
    for (const auto& t : toks) ++freq[t];
  int max_freq = 0;
  for (const auto& [_, n] : freq) max_freq = std::max(max_freq, n);
  for (size_t i = 0; i < cands.size(); ++i) {
    const auto& toks = cand_tokens[i];
    if (toks.empty() || max_freq == 0) continue;
    double sum = 0.0;
    for (const auto& t : toks) sum += static_cast<double>(freq[t]) / max_freq;
    cands[i].score = sum / static_cast<double>(toks.size());
  }

  // rank: score descending, document order as the tiebreak
  std::vector<size_t> order(cands.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (cands[a].score != cands[b].score) return cands[a].score > cands[b].score;
    return cands[a].index < cands[b].index;
  });

  // greedy skip-and-continue packing under the word budget
  std::vector<size_t> picked;
  int used = 0;
  for (size_t idx : order) {
    if (used + cands[idx].words <= config.max_words) {
      picked.push_back(idx);
      used += cands[idx].words;
    }
  }
  if (picked.empty()) picked.push_back(order.front());  // always keep something

  std::sort(picked.begin(), picked.end(),
            [&](size_t a, size_t b) { return cands[a].index < cands[b].index; });
  std::vector<std::string> parts;
  parts.reserve(picked.size());
  for (size_t idx : picked) parts.push_back(cands[idx].text);
  return join(parts, " ");
}

}  // namespace summarize_detail

// Single condensation pass. Only defined for texts at or past the trigger.
inline std::string summarize_once(const std::string& text, const SummaryConfig& config = {}) {
  config.validate();
  if (word_count(text) < config.trigger_words)
    throw contract_error("summarize_once requires at least " +
                         std::to_string(config.trigger_words) + " words");
  return summarize_detail::summarize_pass(text, config);
}

struct SummaryStats {
  std::string text;
  int passes = 0;        // condensation passes actually run
  bool truncated = false;  // hard word-budget fallback fired
};

// Recursive driver with introspection: short texts pass through unchanged;
// long ones are condensed until they fit max_words or max_depth is spent,
// then hard-truncated as a last resort.
inline SummaryStats recursive_summarize_stats(const std::string& text,
                                              const SummaryConfig& config = {}) {
  config.validate();
  SummaryStats out;
  out.text = text;
  if (word_count(text) < config.trigger_words) return out;

  while (word_count(out.text) > config.max_words && out.passes < config.max_depth) {
    std::string next = summarize_detail::summarize_pass(out.text, config);
    ++out.passes;
    if (next == out.text) break;  // no further reduction possible
    out.text = std::move(next);
  }
  if (word_count(out.text) > config.max_words) {
    auto toks = split_ws(out.text);
    toks.resize(static_cast<size_t>(config.max_words));
    out.text = join(toks, " ");
    out.truncated = true;
  }
  return out;
}

inline std::string recursive_summarize(const std::string& text, const SummaryConfig& config = {}) {
  return recursive_summarize_stats(text, config).text;
}

// The full inference-time pipeline: condense long posts, then normalize.
// Classifiers call this when asked to preprocess raw text themselves.
inline std::string preprocess_for_prediction(const std::string& text,
                                             const SummaryConfig& summary_config = {},
                                             const CleanConfig& clean_config = {}) {
  return normalize_text(recursive_summarize(text, summary_config), clean_config);
}

}  // namespace sentinel
