#pragma once

// Shared classifier surface: configuration blocks, the Prediction value, and
// the abstract interface both the linear baseline and the transformer
// implement. Concrete models live in baseline.hpp / electra.hpp; directory
// loading with kind dispatch lives in model_store.hpp.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "sentinel/common.hpp"

namespace sentinel {

struct TransformerConfig {
  int vocabulary_size = 30522;
  int embedding_size = 768;
  int hidden_size = 768;
  int num_hidden_layers = 12;
  int num_attention_heads = 12;
  int intermediate_size = 3072;
  int max_position_embeddings = 512;
  std::string hidden_activation = "gelu";
  double hidden_dropout = 0.1;
  double attention_dropout = 0.1;
  std::string summary_activation = "gelu";
  double summary_last_dropout = 0.1;

  void validate() const {
    if (num_attention_heads <= 0 || hidden_size % num_attention_heads != 0)
      throw contract_error("hidden_size must be divisible by num_attention_heads");
    if (vocabulary_size <= 0 || embedding_size <= 0 || num_hidden_layers <= 0 ||
        intermediate_size <= 0 || max_position_embeddings <= 0)
      throw contract_error("transformer dimensions must be positive");
  }
};

struct FinetuneConfig {
  double learning_rate = 2e-5;
  int batch_size = 32;
  int epochs = 3;
  double weight_decay = 0.01;
  double warmup_fraction = 0.1;
  int max_sequence_tokens = 512;
  uint64_t seed = 42;

  void validate(const TransformerConfig& t) const {
    if (max_sequence_tokens > t.max_position_embeddings)
      throw contract_error("max_sequence_tokens exceeds max_position_embeddings");
    if (learning_rate <= 0 || batch_size <= 0 || epochs < 0)
      throw contract_error("finetune config values must be positive");
  }
};

struct BaselineConfig {
  int ngram_min = 1;
  int ngram_max = 2;
  int min_document_frequency = 2;
  double regularization_strength = 1.0;  // inverse: larger C = weaker penalty
  double convergence_tolerance = 1e-6;
  int max_iterations = 1000;
  uint64_t seed = 42;

  void validate() const {
    if (ngram_min <= 0 || ngram_max < ngram_min || min_document_frequency <= 0 ||
        regularization_strength <= 0 || convergence_tolerance <= 0 || max_iterations <= 0)
      throw contract_error("baseline config values must be positive");
  }
};

// Default hub identifier for the published fine-tuned weights; configuration,
// not code, so air-gapped deployments can point at a local copy instead.
inline constexpr const char* kDefaultCheckpointId = "gooojy/suicidal-electra";

struct Prediction {
  int label = 0;                              // 1 = suicidal
  double confidence = 0.0;                    // probability of the emitted label
  std::array<double, 2> raw_scores{0.0, 0.0};  // [p(non-suicidal), p(suicidal)]
};

// Builds a Prediction from two class probabilities, enforcing the contract:
// scores sum to one, label is the argmax with ties toward 0, confidence is
// the winning probability (hence always >= 0.5).
inline Prediction make_prediction(double p0, double p1) {
  double sum = p0 + p1;
  if (!(std::isfinite(sum)) || std::abs(sum - 1.0) > 1e-9)
    throw contract_error("class probabilities must sum to 1, got " + std::to_string(sum));
  Prediction p;
  p.raw_scores = {p0, p1};
  p.label = p1 > p0 ? 1 : 0;
  p.confidence = p.label == 1 ? p1 : p0;
  return p;
}

// predict() returns nullopt to REJECT input that normalizes to nothing --
// an outcome deliberately distinct from both labels.
class Classifier {
public:
  virtual ~Classifier() = default;

  // preprocess=true runs the full summarize+normalize pipeline first (the
  // service default); preprocess=false treats the text as already cleaned.
  virtual std::optional<Prediction> predict(const std::string& text, bool preprocess) const = 0;

  virtual void persist(const std::string& dir) const = 0;
  virtual std::string kind() const = 0;

  // Identity string for wire contracts; concrete models qualify it with a
  // prefix of their training-corpus hash.
  virtual std::string version() const { return kind(); }
};

}  // namespace sentinel
