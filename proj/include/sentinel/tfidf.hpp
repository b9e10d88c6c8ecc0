#pragma once

// TF-IDF features over cleaned text for the linear baseline: word unigrams
// and bigrams, document-frequency floor, smoothed idf, L2 per document.
// Vocabulary order is lexicographic so a fitted vectorizer serializes and
// restores without drift.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "sentinel/common.hpp"

namespace sentinel {

struct TfidfConfig {
  int ngram_min = 1;
  int ngram_max = 2;
  int min_document_frequency = 2;
};

// index -> weight, sorted by index
using SparseVector = std::vector<std::pair<int, double>>;

class TfidfVectorizer {
public:
  // Counts each distinct n-gram once per document, keeps terms meeting the
  // document-frequency floor, and freezes idf = ln((1+N)/(1+df)) + 1.
  void fit(const std::vector<std::string>& docs, TfidfConfig config = {}) {
    if (docs.empty()) throw contract_error("tfidf fit requires at least one document");
    if (config.ngram_min <= 0 || config.ngram_max < config.ngram_min ||
        config.min_document_frequency <= 0)
      throw contract_error("tfidf config values must be positive");
    config_ = config;

    std::map<std::string, int> df;  // ordered: vocabulary comes out sorted
    std::vector<std::string> grams;
    for (const auto& doc : docs) {
      extract(doc, grams);
      std::sort(grams.begin(), grams.end());
      grams.erase(std::unique(grams.begin(), grams.end()), grams.end());
      for (const auto& g : grams) ++df[g];
    }

    vocab_.clear();
    idf_.clear();
    index_.clear();
    double n = static_cast<double>(docs.size());
    for (const auto& [term, count] : df) {
      if (count < config.min_document_frequency) continue;
      index_.emplace(term, static_cast<int>(vocab_.size()));
      vocab_.push_back(term);
      idf_.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0);
    }
  }

  SparseVector transform(const std::string& doc) const {
    std::vector<std::string> grams;
    extract(doc, grams);
    std::map<int, double> counts;
    for (const auto& g : grams) {
      auto it = index_.find(g);
      if (it != index_.end()) counts[it->second] += 1.0;
    }
    SparseVector out;
    out.reserve(counts.size());
    double norm_sq = 0.0;
    for (const auto& [idx, tf] : counts) {
      double v = tf * idf_[static_cast<size_t>(idx)];
      norm_sq += v * v;
      out.emplace_back(idx, v);
    }
    if (norm_sq > 0.0) {
      double inv = 1.0 / std::sqrt(norm_sq);
      for (auto& [idx, v] : out) v *= inv;
    }
    return out;
  }

  const std::vector<std::string>& vocabulary() const { return vocab_; }
  const std::vector<double>& idf() const { return idf_; }
  const TfidfConfig& config() const { return config_; }
  size_t size() const { return vocab_.size(); }

  // Rebuild from persisted state; vocabulary must be sorted and unique.
  void restore(std::vector<std::string> vocab, std::vector<double> idf, TfidfConfig config) {
    if (vocab.size() != idf.size())
      throw contract_error("tfidf restore: vocabulary and idf lengths differ");
    if (!std::is_sorted(vocab.begin(), vocab.end()) ||
        std::adjacent_find(vocab.begin(), vocab.end()) != vocab.end())
      throw contract_error("tfidf restore: vocabulary must be sorted and unique");
    vocab_ = std::move(vocab);
    idf_ = std::move(idf);
    config_ = config;
    index_.clear();
    for (size_t i = 0; i < vocab_.size(); ++i) index_.emplace(vocab_[i], static_cast<int>(i));
  }

private:
  void extract(const std::string& doc, std::vector<std::string>& grams) const {
    grams.clear();
    std::vector<std::string> tokens = split_ws(doc);
    for (int n = config_.ngram_min; n <= config_.ngram_max; ++n) {
      if (tokens.size() < static_cast<size_t>(n)) break;
      for (size_t i = 0; i + static_cast<size_t>(n) <= tokens.size(); ++i) {
        std::string g = tokens[i];
        for (int j = 1; j < n; ++j) {
          g += ' ';
          g += tokens[i + static_cast<size_t>(j)];
        }
        grams.push_back(std::move(g));
      }
    }
  }

  TfidfConfig config_;
  std::vector<std::string> vocab_;
  std::vector<double> idf_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace sentinel
