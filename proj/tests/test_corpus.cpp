#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sentinel/corpus.hpp"

using namespace sentinel;

namespace {

ProcessedRecord rec(std::string text, int label, std::string cleaned = "") {
  ProcessedRecord r;
  r.text = std::move(text);
  r.summary = r.text;
  r.cleaned = cleaned.empty() ? r.text : std::move(cleaned);
  r.label = label;
  r.empty_cleaned = r.cleaned.empty();
  return r;
}

std::string words(int n) {
  std::string s;
  for (int i = 0; i < n; ++i) {
    if (i) s += ' ';
    s += 'w';
  }
  return s;
}

// Literal restatement of the percentile definition, scanning every integer
// candidate from zero up. Slow on purpose; exists to cross-check the
// rank-based implementation.
int percentile_oracle(std::vector<int> counts, int p) {
  const auto need = static_cast<double>(p) / 100.0 * static_cast<double>(counts.size());
  int max_wc = *std::max_element(counts.begin(), counts.end());
  for (int w = 0; w <= max_wc; ++w) {
    size_t covered = 0;
    for (int c : counts) covered += static_cast<size_t>(c <= w);
    if (static_cast<double>(covered) >= need) return w;
  }
  return max_wc;
}

}  // namespace

TEST_CASE("filter_outliers keeps the boundary and drops beyond it", "[corpus]") {
  std::vector<ProcessedRecord> corpus{rec(words(10), 0), rec(words(430), 1), rec(words(431), 0)};
  auto kept = filter_outliers(corpus);
  REQUIRE(kept.size() == 2);
  CHECK(word_count(kept[0].text) == 10);
  CHECK(word_count(kept[1].text) == 430);

  std::vector<HarmonizedRecord> raw{{SourceId::TDA, words(431), 1}, {SourceId::TDA, words(1), 0}};
  auto kept_raw = filter_outliers(raw);
  REQUIRE(kept_raw.size() == 1);
  CHECK(kept_raw[0].text == "w");

  CHECK(filter_outliers(corpus, 10).size() == 1);
}

TEST_CASE("corpus_stats counts tokens and classes", "[corpus]") {
  std::vector<ProcessedRecord> corpus{rec("x", 1, "a b"), rec("y", 0, "a")};
  auto stats = corpus_stats(corpus, 5);

  REQUIRE(stats.top_words.size() == 2);
  CHECK(stats.top_words[0] == std::pair<std::string, size_t>{"a", 2});
  CHECK(stats.top_words[1] == std::pair<std::string, size_t>{"b", 1});

  CHECK(stats.class_counts[0] == 1);
  CHECK(stats.class_counts[1] == 1);

  SECTION("ties break lexicographically and k truncates") {
    std::vector<ProcessedRecord> c2{rec("x", 0, "b a"), rec("y", 1, "b a c")};
    auto s2 = corpus_stats(c2, 2);
    REQUIRE(s2.top_words.size() == 2);
    CHECK(s2.top_words[0].first == "a");
    CHECK(s2.top_words[1].first == "b");
  }

  SECTION("k must be positive") {
    CHECK_THROWS_AS(corpus_stats(corpus, 0), contract_error);
    CHECK_THROWS_AS(corpus_stats(corpus, -3), contract_error);
  }
}

TEST_CASE("95th percentile of word counts 1..100 is 95", "[corpus]") {
  std::vector<ProcessedRecord> corpus;
  for (int n = 1; n <= 100; ++n) corpus.push_back(rec(words(n), n % 2));
  auto stats = corpus_stats(corpus, 1);
  CHECK(stats.word_count_percentiles.at(95) == 95);
  CHECK(stats.word_count_percentiles.at(50) == 50);
  CHECK(stats.word_count_percentiles.at(99) == 99);

  std::vector<int> counts;
  for (int n = 1; n <= 100; ++n) counts.push_back(n);
  CHECK(percentile_oracle(counts, 95) == 95);
}

TEST_CASE("percentiles agree with the exhaustive oracle on random corpora", "[corpus]") {
  std::mt19937 rng(20260815);
  for (int trial = 0; trial < 50; ++trial) {
    size_t n = 1 + rng() % 400;
    std::vector<ProcessedRecord> corpus;
    std::vector<int> counts;
    for (size_t i = 0; i < n; ++i) {
      int wc = 1 + static_cast<int>(rng() % 600);
      counts.push_back(wc);
      corpus.push_back(rec(words(wc), static_cast<int>(rng() % 2)));
    }
    auto stats = corpus_stats(corpus, 3);
    for (int p : {5, 25, 50, 75, 90, 95, 99}) {
      INFO("trial " << trial << " n " << n << " p " << p);
      REQUIRE(stats.word_count_percentiles.at(p) == percentile_oracle(counts, p));
    }
  }
}

TEST_CASE("split honours the documented small and large examples", "[corpus]") {
  SECTION("ten records, nine against one") {
    std::vector<ProcessedRecord> corpus;
    for (int i = 0; i < 9; ++i) corpus.push_back(rec("t" + std::to_string(i), 0));
    corpus.push_back(rec("t9", 1));
    auto split = split_corpus(corpus);
    CHECK(split.train.size() == 8);
    CHECK(split.validation.size() == 1);
    CHECK(split.test.size() == 1);
  }

  SECTION("full-scale class shape lands on the published part sizes") {
    std::vector<ProcessedRecord> corpus;
    corpus.reserve(262318);
    for (int i = 0; i < 144993; ++i) corpus.push_back(rec("n", 0));
    for (int i = 0; i < 117325; ++i) corpus.push_back(rec("s", 1));
    auto split = split_corpus(corpus);
    CHECK(split.train.size() == 209854);
    CHECK(split.validation.size() == 26232);
    CHECK(split.test.size() == 26232);
  }
}

TEST_CASE("random corpora: conservation, disjointness, sizes, stratification", "[corpus]") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    size_t n = 10 + rng() % 9991;  // N in [10, 10000]
    double pos_rate = 0.05 + (rng() % 90) / 100.0;
    std::vector<ProcessedRecord> corpus;
    size_t global_pos = 0;
    for (size_t i = 0; i < n; ++i) {
      int label = (rng() % 1000) < pos_rate * 1000 ? 1 : 0;
      global_pos += static_cast<size_t>(label);
      corpus.push_back(rec("r" + std::to_string(i), label));
    }

    auto split = split_corpus(corpus, {}, 1000 + static_cast<uint64_t>(trial));
    const auto& tr = split.train;
    const auto& va = split.validation;
    const auto& te = split.test;
    INFO("trial " << trial << " n " << n);

    REQUIRE(tr.size() + va.size() + te.size() == n);
    CHECK(std::llabs(static_cast<long long>(tr.size()) - std::llround(0.8 * double(n))) <= 1);
    CHECK(std::llabs(static_cast<long long>(va.size()) - std::llround(0.1 * double(n))) <= 1);
    CHECK(std::llabs(static_cast<long long>(te.size()) - std::llround(0.1 * double(n))) <= 1);

    // union is exactly the input, each record in exactly one part
    std::set<std::string> seen;
    for (const auto* part : {&tr, &va, &te})
      for (const auto& r : *part) REQUIRE(seen.insert(r.text).second);
    REQUIRE(seen.size() == n);

    // class proportions per part stay near the global rate
    double global_rate = static_cast<double>(global_pos) / static_cast<double>(n);
    for (const auto* part : {&tr, &va, &te}) {
      if (part->empty()) continue;
      size_t pos = 0;
      for (const auto& r : *part) pos += static_cast<size_t>(r.label == 1);
      double rate = static_cast<double>(pos) / static_cast<double>(part->size());
      CHECK(std::abs(rate - global_rate) <= 1.0 / static_cast<double>(part->size()) + 0.01);
    }
  }
}

TEST_CASE("split is a pure function of seed", "[corpus]") {
  std::vector<ProcessedRecord> corpus;
  for (int i = 0; i < 1000; ++i) corpus.push_back(rec("d" + std::to_string(i), i % 3 == 0));

  auto order = [](const CorpusSplit& s) {
    std::string key;
    for (const auto* part : {&s.train, &s.validation, &s.test})
      for (const auto& r : *part) key += r.text + "|";
    return key;
  };

  auto a = split_corpus(corpus, {}, 42);
  auto b = split_corpus(corpus, {}, 42);
  CHECK(order(a) == order(b));

  auto c = split_corpus(corpus, {}, 43);
  CHECK(order(a) != order(c));

  SECTION("non-stratified mode still conserves the corpus") {
    auto flat = split_corpus(corpus, {}, 42, false);
    CHECK(flat.train.size() + flat.validation.size() + flat.test.size() == corpus.size());
    CHECK(flat.train.size() == 800);
  }
}

TEST_CASE("split rejects bad ratios and empty input", "[corpus]") {
  std::vector<ProcessedRecord> corpus{rec("a", 0), rec("b", 1)};
  CHECK_THROWS_AS(split_corpus(corpus, {0.8, 0.1, 0.2}), contract_error);
  CHECK_THROWS_AS(split_corpus({}, {}), contract_error);
  CHECK_NOTHROW(split_corpus(corpus, {0.5, 0.25, 0.25}));
}

TEST_CASE("split persistence round-trips and is byte-stable", "[corpus]") {
  std::vector<ProcessedRecord> corpus;
  corpus.push_back(rec("commas, and \"quotes\"", 1, "comma quote"));
  corpus.push_back(rec("line\nbreak", 0, "line break"));
  corpus.push_back(rec("emoji \xF0\x9F\x98\x94 text", 1, "emoji text"));
  for (int i = 0; i < 37; ++i) corpus.push_back(rec("filler " + std::to_string(i), i % 2));

  auto split = split_corpus(corpus, {}, 7);

  namespace fs = std::filesystem;
  fs::path a = fs::temp_directory_path() / "sentinel_split_a";
  fs::path b = fs::temp_directory_path() / "sentinel_split_b";
  fs::remove_all(a);
  fs::remove_all(b);
  fs::create_directories(a);
  fs::create_directories(b);

  write_split(a.string(), split);
  write_split(b.string(), split);

  for (const char* name : {"train.csv", "validation.csv", "test.csv", "split_manifest.json"})
    CHECK(read_file((a / name).string()) == read_file((b / name).string()));

  auto loaded = read_split(a.string());
  REQUIRE(loaded.split.train.size() == split.train.size());
  REQUIRE(loaded.split.validation.size() == split.validation.size());
  REQUIRE(loaded.split.test.size() == split.test.size());
  for (size_t i = 0; i < split.train.size(); ++i) {
    CHECK(loaded.split.train[i].text == split.train[i].text);
    CHECK(loaded.split.train[i].cleaned == split.train[i].cleaned);
    CHECK(loaded.split.train[i].label == split.train[i].label);
  }
  CHECK(loaded.split.seed == 7);

  std::vector<ProcessedRecord> all = split.train;
  all.insert(all.end(), split.validation.begin(), split.validation.end());
  all.insert(all.end(), split.test.begin(), split.test.end());
  CHECK(loaded.manifest.at("corpus_hash").get<std::string>() == corpus_content_hash(all));
  CHECK(loaded.manifest.at("counts").at("train").at("records").get<size_t>() ==
        split.train.size());

  SECTION("labels outside 0/1 are rejected on read") {
    write_file((a / "train.csv").string(), "text,summary,cleaned,label\nx,x,x,7\n");
    CHECK_THROWS_AS(read_processed_csv((a / "train.csv").string()), contract_error);
  }
}
