#pragma once

// Linear baseline: TF-IDF features into L2-regularized logistic regression,
// trained with L-BFGS. Dependency-light on purpose -- CI and the service can
// run the whole stack without the transformer.

#include <cmath>
#include <cstdio>
#include <ctime>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "sentinel/corpus.hpp"
#include "sentinel/lbfgs.hpp"
#include "sentinel/model.hpp"
#include "sentinel/summarize.hpp"
#include "sentinel/tfidf.hpp"
#include "sentinel/weights_io.hpp"

namespace sentinel {

namespace baseline_detail {

inline double sigmoid(double u) {
  if (u >= 0) return 1.0 / (1.0 + std::exp(-u));
  double e = std::exp(u);
  return e / (1.0 + e);
}

inline double log1pexp(double u) {
  if (u > 35.0) return u;
  if (u < -35.0) return 0.0;
  return std::log1p(std::exp(u));
}

}  // namespace baseline_detail

class BaselineModel final : public Classifier {
public:
  static BaselineModel train(const std::vector<ProcessedRecord>& train_set,
                             BaselineConfig config = {}) {
    config.validate();
    if (train_set.empty()) throw contract_error("train_baseline requires a non-empty training set");
    size_t pos = 0;
    for (const auto& r : train_set) pos += static_cast<size_t>(r.label == 1);
    if (pos == 0) throw contract_error("training set lacks class suicidal (1)");
    if (pos == train_set.size())
      throw contract_error("training set lacks class non-suicidal (0)");

    BaselineModel model;
    model.config_ = config;
    model.corpus_hash_ = corpus_content_hash(train_set);

    std::vector<std::string> docs;
    docs.reserve(train_set.size());
    for (const auto& r : train_set) docs.push_back(r.cleaned);
    model.vectorizer_.fit(docs, {config.ngram_min, config.ngram_max,
                                 config.min_document_frequency});

    std::vector<SparseVector> rows;
    rows.reserve(train_set.size());
    std::vector<double> ys;
    ys.reserve(train_set.size());
    for (const auto& r : train_set) {
      rows.push_back(model.vectorizer_.transform(r.cleaned));
      ys.push_back(r.label == 1 ? 1.0 : -1.0);
    }

    const long n = static_cast<long>(model.vectorizer_.size());
    const double c = config.regularization_strength;
    auto objective = [&](const Eigen::VectorXd& z, Eigen::VectorXd& grad) {
      grad.setZero();
      double f = 0.0;
      for (size_t i = 0; i < rows.size(); ++i) {
        double margin = z[n];
        for (const auto& [idx, v] : rows[i]) margin += v * z[idx];
        double u = -ys[i] * margin;
        f += c * baseline_detail::log1pexp(u);
        double coef = -c * ys[i] * baseline_detail::sigmoid(u);
        for (const auto& [idx, v] : rows[i]) grad[idx] += coef * v;
        grad[n] += coef;
      }
      f += 0.5 * z.head(n).squaredNorm();  // intercept stays unregularized
      grad.head(n) += z.head(n);
      return f;
    };

    auto result = lbfgs_minimize(objective, Eigen::VectorXd::Zero(n + 1),
                                 {10, config.convergence_tolerance, config.max_iterations});
    model.weights_ = result.x.head(n);
    model.bias_ = result.x[n];
    return model;
  }

  // Raw margin w.x + b over an already-cleaned string.
  double decision_function(const std::string& cleaned) const {
    double m = bias_;
    for (const auto& [idx, v] : vectorizer_.transform(cleaned)) m += v * weights_[idx];
    return m;
  }

  std::optional<Prediction> predict(const std::string& text, bool preprocess) const override {
    std::string cleaned = preprocess ? preprocess_for_prediction(text) : text;
    if (trim(cleaned).empty()) return std::nullopt;
    double p1 = baseline_detail::sigmoid(decision_function(cleaned));
    return make_prediction(1.0 - p1, p1);
  }

  std::string kind() const override { return "baseline"; }

  std::string version() const override {
    return kind() + ":" + (corpus_hash_.empty() ? "unversioned" : corpus_hash_.substr(0, 12));
  }

  void set_metrics(std::map<std::string, double> metrics) { metrics_ = std::move(metrics); }

  void persist(const std::string& dir) const override {
    nlohmann::ordered_json m;
    m["kind"] = kind();
    m["version"] = 1;
    m["config"] = {{"ngram_min", config_.ngram_min},
                   {"ngram_max", config_.ngram_max},
                   {"min_document_frequency", config_.min_document_frequency},
                   {"regularization_strength", config_.regularization_strength},
                   {"convergence_tolerance", config_.convergence_tolerance},
                   {"max_iterations", config_.max_iterations},
                   {"seed", config_.seed}};
    m["vocabulary_size"] = vectorizer_.size();
    m["corpus_hash"] = corpus_hash_;
    m["metrics"] = metrics_;
    m["created_at"] = utc_timestamp();
    write_file(dir + "/manifest.json", m.dump(2) + "\n");

    std::string vocab;
    for (const auto& term : vectorizer_.vocabulary()) {
      vocab += term;
      vocab += '\n';
    }
    write_file(dir + "/vocab.txt", vocab);

    WeightsMap weights;
    Tensor w;
    w.dims = {static_cast<uint64_t>(weights_.size())};
    w.f64.assign(weights_.data(), weights_.data() + weights_.size());
    weights.emplace("linear.weight", std::move(w));
    Tensor b;
    b.dims = {1};
    b.f64 = {bias_};
    weights.emplace("linear.bias", std::move(b));
    Tensor idf;
    idf.dims = {static_cast<uint64_t>(vectorizer_.idf().size())};
    idf.f64 = vectorizer_.idf();
    weights.emplace("tfidf.idf", std::move(idf));
    write_weights(dir + "/weights.bin", weights);
  }

  static BaselineModel load(const std::string& dir) {
    nlohmann::json m;
    try {
      m = nlohmann::json::parse(read_file(dir + "/manifest.json"));
    } catch (const nlohmann::json::exception& e) {
      throw contract_error("model manifest is not valid json: " + std::string(e.what()));
    }
    auto need = [&](const char* field) -> const nlohmann::json& {
      if (!m.contains(field))
        throw contract_error(std::string("model manifest missing field '") + field + "'");
      return m[field];
    };
    if (need("kind").get<std::string>() != "baseline")
      throw contract_error("model manifest field 'kind' is not 'baseline'");
    if (need("version").get<int>() != 1)
      throw contract_error("model manifest field 'version' unsupported: " +
                           m["version"].dump());

    BaselineModel model;
    const auto& cfg = need("config");
    auto cfg_get = [&](const char* field, auto def) {
      if (!cfg.contains(field))
        throw contract_error(std::string("model manifest missing field 'config.") + field + "'");
      return cfg[field].get<decltype(def)>();
    };
    model.config_.ngram_min = cfg_get("ngram_min", int{});
    model.config_.ngram_max = cfg_get("ngram_max", int{});
    model.config_.min_document_frequency = cfg_get("min_document_frequency", int{});
    model.config_.regularization_strength = cfg_get("regularization_strength", double{});
    model.config_.convergence_tolerance = cfg_get("convergence_tolerance", double{});
    model.config_.max_iterations = cfg_get("max_iterations", int{});
    model.config_.seed = cfg_get("seed", uint64_t{});
    model.corpus_hash_ = need("corpus_hash").get<std::string>();

    std::vector<std::string> vocab;
    for (const auto& line : split(read_file(dir + "/vocab.txt"), '\n'))
      if (!line.empty()) vocab.push_back(line);

    WeightsMap weights = read_weights(dir + "/weights.bin");
    for (const char* name : {"linear.weight", "linear.bias", "tfidf.idf"})
      if (!weights.count(name))
        throw contract_error(std::string("weights file missing tensor '") + name + "'");

    size_t expected = need("vocabulary_size").get<size_t>();
    const auto& w = weights.at("linear.weight");
    const auto& idf = weights.at("tfidf.idf");
    if (vocab.size() != expected || w.f64.size() != expected || idf.f64.size() != expected)
      throw contract_error("model manifest field 'vocabulary_size' (" + std::to_string(expected) +
                           ") does not match artifact contents");

    model.vectorizer_.restore(std::move(vocab), idf.f64,
                              {model.config_.ngram_min, model.config_.ngram_max,
                               model.config_.min_document_frequency});
    model.weights_ = Eigen::Map<const Eigen::VectorXd>(w.f64.data(),
                                                       static_cast<long>(w.f64.size()));
    const auto& b = weights.at("linear.bias");
    if (b.f64.size() != 1) throw contract_error("tensor 'linear.bias' must hold one value");
    model.bias_ = b.f64[0];
    return model;
  }

  const BaselineConfig& config() const { return config_; }
  size_t vocabulary_size() const { return vectorizer_.size(); }
  const std::string& corpus_hash() const { return corpus_hash_; }

private:
  BaselineConfig config_;
  TfidfVectorizer vectorizer_;
  Eigen::VectorXd weights_;
  double bias_ = 0.0;
  std::string corpus_hash_;
  std::map<std::string, double> metrics_;
};

inline BaselineModel train_baseline(const std::vector<ProcessedRecord>& train_set,
                                    BaselineConfig config = {}) {
  return BaselineModel::train(train_set, config);
}

}  // namespace sentinel
