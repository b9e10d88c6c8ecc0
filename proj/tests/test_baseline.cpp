#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "sentinel/baseline.hpp"
#include "sentinel/evaluate.hpp"

using namespace sentinel;

namespace {

const std::string kFixture = std::string(SENTINEL_REPO_DIR) + "/data/fixtures/corpus_500.csv";

double held_out_accuracy(const BaselineModel& model, const std::vector<ProcessedRecord>& part) {
  size_t correct = 0;
  for (const auto& r : part) {
    auto p = model.predict(r.cleaned, false);
    REQUIRE(p.has_value());
    correct += static_cast<size_t>(p->label == r.label);
  }
  return static_cast<double>(correct) / static_cast<double>(part.size());
}

}  // namespace

TEST_CASE("tfidf vectorizer basics", "[baseline]") {
  TfidfVectorizer vec;
  vec.fit({"sad night alone", "sad night gone", "happy day out", "happy day inside"}, {1, 2, 2});

  // singleton n-grams are pruned by the document-frequency floor
  const auto& vocab = vec.vocabulary();
  CHECK(std::is_sorted(vocab.begin(), vocab.end()));
  CHECK(std::find(vocab.begin(), vocab.end(), "sad") != vocab.end());
  CHECK(std::find(vocab.begin(), vocab.end(), "sad night") != vocab.end());  // bigram, df 2
  CHECK(std::find(vocab.begin(), vocab.end(), "night alone") == vocab.end());  // df 1
  CHECK(std::find(vocab.begin(), vocab.end(), "alone") == vocab.end());  // unigram, df 1

  auto v = vec.transform("sad night alone");
  double norm = 0;
  for (const auto& [idx, val] : v) norm += val * val;
  CHECK(norm == Catch::Approx(1.0).margin(1e-12));

  CHECK(vec.transform("zzz unseen").empty());
  CHECK_THROWS_AS(vec.fit({}, {}), contract_error);

  SECTION("idf follows the smoothed formula") {
    // "night" has df 2 of 4 docs: ln(5/3) + 1
    auto it = std::find(vocab.begin(), vocab.end(), "night");
    REQUIRE(it != vocab.end());
    CHECK(vec.idf()[size_t(it - vocab.begin())] ==
          Catch::Approx(std::log(5.0 / 3.0) + 1.0).margin(1e-12));
  }
}

TEST_CASE("lbfgs minimizes a convex quadratic", "[baseline]") {
  auto fg = [](const Eigen::VectorXd& x, Eigen::VectorXd& g) {
    g[0] = 2 * (x[0] - 3.0);
    g[1] = 2 * (x[1] + 1.0);
    return (x[0] - 3.0) * (x[0] - 3.0) + (x[1] + 1.0) * (x[1] + 1.0);
  };
  auto res = lbfgs_minimize(fg, Eigen::VectorXd::Zero(2), {10, 1e-8, 200});
  CHECK(res.converged);
  CHECK(res.x[0] == Catch::Approx(3.0).margin(1e-6));
  CHECK(res.x[1] == Catch::Approx(-1.0).margin(1e-6));
}

TEST_CASE("bundled fixture is linearly separable on its marker token", "[baseline]") {
  auto corpus = read_processed_csv(kFixture);
  REQUIRE(corpus.size() == 500);
  size_t pos = 0;
  for (const auto& r : corpus) {
    auto tokens = split_ws(r.cleaned);
    bool has_die = std::find(tokens.begin(), tokens.end(), "die") != tokens.end();
    REQUIRE(has_die == (r.label == 1));
    pos += static_cast<size_t>(r.label == 1);
  }
  CHECK(pos == 250);
}

TEST_CASE("baseline separates the fixture and not shuffled labels", "[baseline]") {
  auto corpus = read_processed_csv(kFixture);
  auto split = split_corpus(corpus);

  auto model = train_baseline(split.train);
  CHECK(held_out_accuracy(model, split.test) == 1.0);
  CHECK(held_out_accuracy(model, split.validation) == 1.0);

  SECTION("label shuffle destroys the signal without leaking") {
    std::vector<int> labels;
    for (const auto& r : corpus) labels.push_back(r.label);
    std::mt19937_64 rng(8811);
    for (size_t i = labels.size(); i > 1; --i)
      std::swap(labels[i - 1], labels[rng() % i]);
    auto shuffled = corpus;
    for (size_t i = 0; i < shuffled.size(); ++i) shuffled[i].label = labels[i];

    auto sh_split = split_corpus(shuffled);
    auto sh_model = train_baseline(sh_split.train);
    double acc = held_out_accuracy(sh_model, sh_split.test);
    CHECK(acc >= 0.40);
    CHECK(acc <= 0.60);
  }
}

TEST_CASE("single-class training set names the missing class", "[baseline]") {
  auto corpus = read_processed_csv(kFixture);
  std::vector<ProcessedRecord> only_pos, only_neg;
  for (const auto& r : corpus) (r.label == 1 ? only_pos : only_neg).push_back(r);

  CHECK_THROWS_WITH(train_baseline(only_pos),
                    Catch::Matchers::ContainsSubstring("non-suicidal (0)"));
  CHECK_THROWS_WITH(train_baseline(only_neg), Catch::Matchers::ContainsSubstring("suicidal (1)"));
  CHECK_THROWS_AS(train_baseline({}), contract_error);
}

TEST_CASE("prediction invariants and rejection", "[baseline]") {
  auto corpus = read_processed_csv(kFixture);
  auto model = train_baseline(corpus);

  for (size_t i = 0; i < 40; ++i) {
    auto p = model.predict(corpus[i].cleaned, false);
    REQUIRE(p.has_value());
    CHECK(p->raw_scores[0] + p->raw_scores[1] == Catch::Approx(1.0).margin(1e-9));
    CHECK(p->label == (p->raw_scores[1] > p->raw_scores[0] ? 1 : 0));
    CHECK(p->confidence >= 0.5);
    CHECK(p->confidence == std::max(p->raw_scores[0], p->raw_scores[1]));
  }

  CHECK_FALSE(model.predict("", false).has_value());
  CHECK_FALSE(model.predict("   ", false).has_value());
  // stopword-only input normalizes to nothing when preprocessing is on
  CHECK_FALSE(model.predict("the and of it", true).has_value());
  CHECK(model.predict("unseen tokens only qqq", false).has_value());
}

TEST_CASE("more of the discriminative token never lowers the positive score", "[baseline]") {
  auto model = train_baseline(read_processed_csv(kFixture));
  std::string text = "night work friend";
  double prev = -1.0;
  for (int k = 0; k < 6; ++k) {
    auto p = model.predict(text, false);
    REQUIRE(p.has_value());
    CHECK(p->raw_scores[1] >= prev - 1e-12);
    prev = p->raw_scores[1];
    text += " die";
  }
  CHECK(prev > 0.5);  // six mentions: firmly positive
}

TEST_CASE("training is deterministic", "[baseline]") {
  auto corpus = read_processed_csv(kFixture);
  std::vector<ProcessedRecord> small(corpus.begin(), corpus.begin() + 120);
  auto a = train_baseline(small);
  auto b = train_baseline(small);
  for (size_t i = 0; i < 20; ++i) {
    auto pa = a.predict(corpus[i].cleaned, false);
    auto pb = b.predict(corpus[i].cleaned, false);
    REQUIRE(pa.has_value());
    REQUIRE(pb.has_value());
    CHECK(pa->raw_scores[0] == pb->raw_scores[0]);
    CHECK(pa->raw_scores[1] == pb->raw_scores[1]);
  }
}

TEST_CASE("persist/load round-trips predictions exactly", "[baseline]") {
  namespace fs = std::filesystem;
  auto corpus = read_processed_csv(kFixture);
  auto model = train_baseline(corpus);

  fs::path dir = fs::temp_directory_path() / "sentinel_baseline_model";
  fs::remove_all(dir);
  fs::create_directories(dir);
  model.persist(dir.string());

  auto loaded = BaselineModel::load(dir.string());
  CHECK(loaded.vocabulary_size() == model.vocabulary_size());
  CHECK(loaded.corpus_hash() == model.corpus_hash());

  for (size_t i = 0; i < 100; ++i) {
    auto a = model.predict(corpus[i].cleaned, false);
    auto b = loaded.predict(corpus[i].cleaned, false);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    // bitwise identity, not approximate
    CHECK(a->raw_scores[0] == b->raw_scores[0]);
    CHECK(a->raw_scores[1] == b->raw_scores[1]);
    CHECK(a->label == b->label);
  }

  SECTION("corrupt manifests fail naming the offending field") {
    auto manifest = read_file((dir / "manifest.json").string());
    auto json = nlohmann::json::parse(manifest);
    json["vocabulary_size"] = json["vocabulary_size"].get<size_t>() + 7;
    write_file((dir / "manifest.json").string(), json.dump(2));
    CHECK_THROWS_WITH(BaselineModel::load(dir.string()),
                      Catch::Matchers::ContainsSubstring("vocabulary_size"));

    json.erase("corpus_hash");
    write_file((dir / "manifest.json").string(), json.dump(2));
    CHECK_THROWS_WITH(BaselineModel::load(dir.string()),
                      Catch::Matchers::ContainsSubstring("corpus_hash"));

    write_file((dir / "manifest.json").string(), "not json at all");
    CHECK_THROWS_WITH(BaselineModel::load(dir.string()),
                      Catch::Matchers::ContainsSubstring("not valid json"));
  }

  SECTION("loading from an empty directory fails") {
    fs::path empty = fs::temp_directory_path() / "sentinel_empty_model";
    fs::remove_all(empty);
    fs::create_directories(empty);
    CHECK_THROWS_AS(BaselineModel::load(empty.string()), env_error);
  }
}

TEST_CASE("evaluation_report plugs into a trained baseline", "[baseline]") {
  namespace fs = std::filesystem;
  auto corpus = read_processed_csv(kFixture);
  auto split = split_corpus(corpus);
  auto model = train_baseline(split.train);

  fs::path dir = fs::temp_directory_path() / "sentinel_baseline_report";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto report = evaluation_report(model, split.test, dir.string());
  CHECK(report.error_rate == 0.0);
  CHECK(report.matrix.total() == split.test.size());
}
