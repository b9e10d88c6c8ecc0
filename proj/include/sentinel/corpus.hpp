#pragma once

// Corpus-level operations between ingest and training: word-count outlier
// removal, descriptive statistics, and the seeded stratified 80/10/10 split.
// Everything here is deterministic by construction -- the split artifact must
// be byte-identical across runs and platforms, which is also why shuffling
// is a hand-rolled Fisher-Yates (std::shuffle's output is implementation-
// defined) and the manifest carries no timestamps.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "sentinel/common.hpp"
#include "sentinel/csv.hpp"
#include "sentinel/sha256.hpp"
#include "sentinel/summarize.hpp"
#include "sentinel/textprep.hpp"

namespace sentinel {

// Drops records whose raw text exceeds max_words. The boundary stays: a
// 430-word post "falls within" the cap.
inline std::vector<ProcessedRecord> filter_outliers(const std::vector<ProcessedRecord>& corpus,
                                                    int max_words = 430) {
  std::vector<ProcessedRecord> out;
  out.reserve(corpus.size());
  for (const auto& r : corpus)
    if (word_count(r.text) <= max_words) out.push_back(r);
  return out;
}

// Raw-text variant used before summarization in the pipeline.
inline std::vector<HarmonizedRecord> filter_outliers(const std::vector<HarmonizedRecord>& corpus,
                                                     int max_words = 430) {
  std::vector<HarmonizedRecord> out;
  out.reserve(corpus.size());
  for (const auto& r : corpus)
    if (word_count(r.text) <= max_words) out.push_back(r);
  return out;
}

struct CorpusStats {
  std::map<int, size_t> class_counts;
  std::map<int, int> word_count_percentiles;  // percentile -> raw word count
  std::vector<std::pair<std::string, size_t>> top_words;
};

// Percentile p over raw word counts: smallest w such that at least p% of
// records have word_count <= w. Top-k tokens counted over the cleaned
// column, ties broken lexicographically.
inline CorpusStats corpus_stats(const std::vector<ProcessedRecord>& corpus, int k) {
  if (k <= 0) throw contract_error("corpus_stats requires k > 0");
  CorpusStats stats;

  std::vector<int> counts;
  counts.reserve(corpus.size());
  for (const auto& r : corpus) {
    ++stats.class_counts[r.label];
    counts.push_back(word_count(r.text));
  }
  std::sort(counts.begin(), counts.end());
  if (!counts.empty()) {
    for (int p : {5, 25, 50, 75, 90, 95, 99}) {
      size_t rank = static_cast<size_t>(
          std::ceil(static_cast<double>(p) / 100.0 * static_cast<double>(counts.size())));
      if (rank == 0) rank = 1;
      stats.word_count_percentiles[p] = counts[rank - 1];
    }
  }

  std::map<std::string, size_t> freq;  // ordered: lexicographic tie-break for free
  for (const auto& r : corpus)
    for (const auto& t : split_ws(r.cleaned)) ++freq[t];
  stats.top_words.assign(freq.begin(), freq.end());
  std::stable_sort(stats.top_words.begin(), stats.top_words.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (stats.top_words.size() > static_cast<size_t>(k)) stats.top_words.resize(static_cast<size_t>(k));
  return stats;
}

struct SplitRatios {
  double train = 0.8;
  double validation = 0.1;
  double test = 0.1;
};

struct CorpusSplit {
  std::vector<ProcessedRecord> train;
  std::vector<ProcessedRecord> validation;
  std::vector<ProcessedRecord> test;
  SplitRatios ratios;
  uint64_t seed = 42;
  bool stratified = true;
};

namespace corpus_detail {

// Fisher-Yates with an explicit generator mapping, so the permutation is a
// pure function of the seed on every platform.
inline void deterministic_shuffle(std::vector<size_t>& v, std::mt19937_64& rng) {
  for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

// Largest-remainder apportionment: hand out `total` slots across groups in
// proportion to `quota`, never exceeding `cap`. Floors first, then one
// leftover each to the largest fractional remainders (ties to the earlier
// group), so every group stays within one of its exact quota unless a
// capacity forces spill-over.
inline std::vector<size_t> apportion(size_t total, const std::vector<double>& quota,
                                     const std::vector<size_t>& cap) {
  size_t g = quota.size();
  std::vector<size_t> out(g);
  size_t assigned = 0;
  for (size_t i = 0; i < g; ++i) {
    out[i] = std::min(static_cast<size_t>(std::floor(quota[i])), cap[i]);
    assigned += out[i];
  }
  std::vector<size_t> order(g);
  for (size_t i = 0; i < g; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return quota[a] - std::floor(quota[a]) > quota[b] - std::floor(quota[b]);
  });
  for (size_t i : order) {
    if (assigned >= total) break;
    if (out[i] < cap[i]) ++out[i], ++assigned;
  }
  // capacity-forced spill: keep filling wherever room remains
  for (size_t i = 0; i < g && assigned < total; ++i)
    while (out[i] < cap[i] && assigned < total) ++out[i], ++assigned;
  return out;
}

}  // namespace corpus_detail

// Seeded stratified split. Each class is shuffled and cut independently
// (test, then validation, then the train remainder), and the per-part
// results are interleaved by a final seeded shuffle so no part ends up
// class-blocked. Rounding is half-away-from-zero per class.
inline CorpusSplit split_corpus(const std::vector<ProcessedRecord>& corpus,
                                SplitRatios ratios = {}, uint64_t seed = 42,
                                bool stratified = true) {
  if (corpus.empty()) throw contract_error("split_corpus requires a non-empty corpus");
  double sum = ratios.train + ratios.validation + ratios.test;
  if (std::abs(sum - 1.0) > 1e-9)
    throw contract_error("split ratios must sum to 1, got " + std::to_string(sum));

  CorpusSplit split;
  split.ratios = ratios;
  split.seed = seed;
  split.stratified = stratified;

  // group record indices: per class when stratified, one group otherwise
  std::map<int, std::vector<size_t>> groups;
  for (size_t i = 0; i < corpus.size(); ++i)
    groups[stratified ? corpus[i].label : 0].push_back(i);
  for (auto& [label, idx] : groups) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(label + 1)));
    corpus_detail::deterministic_shuffle(idx, rng);
  }

  // Part sizes are fixed at the corpus level first (half-away-from-zero),
  // then spread across classes by largest remainder. Rounding per class and
  // summing would let the train remainder drift two off its target.
  size_t n = corpus.size();
  size_t want_test = std::min(
      static_cast<size_t>(std::llround(ratios.test * static_cast<double>(n))), n);
  size_t want_val = std::min(
      static_cast<size_t>(std::llround(ratios.validation * static_cast<double>(n))),
      n - want_test);

  std::vector<double> test_quota, val_quota;
  std::vector<size_t> caps;
  for (const auto& [label, idx] : groups) {
    test_quota.push_back(ratios.test * static_cast<double>(idx.size()));
    val_quota.push_back(ratios.validation * static_cast<double>(idx.size()));
    caps.push_back(idx.size());
  }
  std::vector<size_t> n_test = corpus_detail::apportion(want_test, test_quota, caps);
  for (size_t i = 0; i < caps.size(); ++i) caps[i] -= n_test[i];
  std::vector<size_t> n_val = corpus_detail::apportion(want_val, val_quota, caps);

  std::vector<size_t> test_idx, val_idx, train_idx;
  size_t gi = 0;
  for (auto& [label, idx] : groups) {
    auto test_end = idx.begin() + static_cast<long>(n_test[gi]);
    auto val_end = test_end + static_cast<long>(n_val[gi]);
    test_idx.insert(test_idx.end(), idx.begin(), test_end);
    val_idx.insert(val_idx.end(), test_end, val_end);
    train_idx.insert(train_idx.end(), val_end, idx.end());
    ++gi;
  }

  // interleave classes within each part
  int salt = 1;
  for (auto* part : {&train_idx, &val_idx, &test_idx}) {
    std::mt19937_64 rng(seed + static_cast<uint64_t>(salt++) * 0xd1b54a32d192ed03ULL);
    corpus_detail::deterministic_shuffle(*part, rng);
  }

  auto collect = [&](const std::vector<size_t>& idx) {
    std::vector<ProcessedRecord> out;
    out.reserve(idx.size());
    for (size_t i : idx) out.push_back(corpus[i]);
    return out;
  };
  split.train = collect(train_idx);
  split.validation = collect(val_idx);
  split.test = collect(test_idx);
  return split;
}

// ---------------------------------------------------------------------------
// Persistence: processed tables, split directory, manifest.

inline void write_processed_csv(const std::string& path,
                                const std::vector<ProcessedRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw env_error("cannot write processed table: " + path);
  out << "text,summary,cleaned,label\n";
  for (const auto& r : records)
    csv::write_record(out, {r.text, r.summary, r.cleaned, std::to_string(r.label)});
  if (!out) throw env_error("short write: " + path);
}

inline std::vector<ProcessedRecord> read_processed_csv(const std::string& path) {
  csv::Table t = csv::Table::parse_file(path);
  int text = t.column_index("text"), summary = t.column_index("summary"),
      cleaned = t.column_index("cleaned"), label = t.column_index("label");
  if (text < 0 || summary < 0 || cleaned < 0 || label < 0)
    throw contract_error("processed table lacks text/summary/cleaned/label columns: " + path);
  std::vector<ProcessedRecord> out;
  out.reserve(t.size());
  for (size_t i = 0; i < t.size(); ++i) {
    ProcessedRecord r;
    r.text = t.field(i, text);
    r.summary = t.field(i, summary);
    r.cleaned = t.field(i, cleaned);
    std::string lab = trim(t.field(i, label));
    if (lab != "0" && lab != "1")
      throw contract_error("processed label must be 0/1, got '" + lab + "' at row " +
                           std::to_string(i));
    r.label = lab == "1" ? 1 : 0;
    r.empty_cleaned = r.cleaned.empty();
    out.push_back(std::move(r));
  }
  return out;
}

// Order-sensitive content hash of a processed corpus; field and record
// separators are control bytes that cannot appear in the data.
inline std::string corpus_content_hash(const std::vector<ProcessedRecord>& records) {
  Sha256 h;
  for (const auto& r : records) {
    h.update(r.text);
    h.update("\x1f");
    h.update(r.summary);
    h.update("\x1f");
    h.update(r.cleaned);
    h.update("\x1f");
    h.update(r.label == 1 ? "1" : "0");
    h.update("\x1e");
  }
  return to_hex(h.digest());
}

// Writes train/validation/test tables plus a manifest. Deliberately free of
// timestamps and machine identity: two runs over the same input are
// byte-identical.
inline void write_split(const std::string& dir, const CorpusSplit& split) {
  write_processed_csv(dir + "/train.csv", split.train);
  write_processed_csv(dir + "/validation.csv", split.validation);
  write_processed_csv(dir + "/test.csv", split.test);

  nlohmann::ordered_json m;
  m["format_version"] = 1;
  m["seed"] = split.seed;
  m["stratified"] = split.stratified;
  m["ratios"] = {{"train", split.ratios.train},
                 {"validation", split.ratios.validation},
                 {"test", split.ratios.test}};
  auto part = [](const std::vector<ProcessedRecord>& v) {
    size_t pos = 0;
    for (const auto& r : v) pos += static_cast<size_t>(r.label == 1);
    return nlohmann::ordered_json{
        {"records", v.size()}, {"suicidal", pos}, {"non_suicidal", v.size() - pos}};
  };
  m["counts"] = {{"train", part(split.train)},
                 {"validation", part(split.validation)},
                 {"test", part(split.test)}};
  std::vector<ProcessedRecord> all;
  all.reserve(split.train.size() + split.validation.size() + split.test.size());
  all.insert(all.end(), split.train.begin(), split.train.end());
  all.insert(all.end(), split.validation.begin(), split.validation.end());
  all.insert(all.end(), split.test.begin(), split.test.end());
  m["corpus_hash"] = corpus_content_hash(all);
  write_file(dir + "/split_manifest.json", m.dump(2) + "\n");
}

struct LoadedSplit {
  CorpusSplit split;
  nlohmann::json manifest;
};

inline LoadedSplit read_split(const std::string& dir) {
  LoadedSplit out;
  out.split.train = read_processed_csv(dir + "/train.csv");
  out.split.validation = read_processed_csv(dir + "/validation.csv");
  out.split.test = read_processed_csv(dir + "/test.csv");
  out.manifest = nlohmann::json::parse(read_file(dir + "/split_manifest.json"));
  if (out.manifest.contains("seed")) out.split.seed = out.manifest["seed"].get<uint64_t>();
  if (out.manifest.contains("stratified"))
    out.split.stratified = out.manifest["stratified"].get<bool>();
  return out;
}

}  // namespace sentinel
