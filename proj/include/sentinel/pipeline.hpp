#pragma once

// Stage orchestration behind the command-line tool. Each stage reads the
// previous stage's output directory, writes its own artifacts, and records a
// run manifest (config snapshot, hashed inputs, outputs, seed, timing) so a
// run can be audited and replayed. Stages communicate through files only.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sentinel/baseline.hpp"
#include "sentinel/common.hpp"
#include "sentinel/corpus.hpp"
#include "sentinel/electra.hpp"
#include "sentinel/evaluate.hpp"
#include "sentinel/ingest.hpp"
#include "sentinel/model_store.hpp"
#include "sentinel/service.hpp"
#include "sentinel/sha256.hpp"
#include "sentinel/summarize.hpp"
#include "sentinel/svg.hpp"
#include "sentinel/textprep.hpp"

namespace sentinel {

inline constexpr const char* kToolVersion = "sentinel 0.1.0";

// Everything the stages need, mirrored one-to-one by the optional JSON config
// file. Unknown keys are rejected so config typos fail loudly instead of
// silently running with defaults.
struct PipelineConfig {
  std::string data_dir = "data/raw";
  bool dedup_exact_text = false;
  bool spell_fix = false;
  SummaryConfig summary;
  int max_record_words = 430;  // records longer than this are dropped after cleaning
  SplitRatios ratios;
  BaselineConfig baseline;
  TransformerConfig transformer;
  FinetuneConfig finetune;
  std::string checkpoint_dir = "checkpoints/electra-base";
  ServiceConfig service;

  void validate() const {
    summary.validate();
    if (max_record_words <= 0)
      throw contract_error("max_record_words must be positive");
    baseline.validate();
    transformer.validate();
    finetune.validate(transformer);
    service.validate();
    double sum = ratios.train + ratios.validation + ratios.test;
    if (!(ratios.train > 0 && ratios.validation >= 0 && ratios.test >= 0) ||
        std::abs(sum - 1.0) > 1e-9)
      throw contract_error("split ratios must be non-negative and sum to 1");
  }
};

namespace pipeline_detail {

template <typename T>
T as(const nlohmann::json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw contract_error("config key '" + key + "' has the wrong type");
  }
}

inline void parse_summary(const nlohmann::json& j, SummaryConfig& cfg) {
  for (const auto& [key, value] : j.items()) {
    if (key == "trigger_words") cfg.trigger_words = as<int>(value, key);
    else if (key == "min_words") cfg.min_words = as<int>(value, key);
    else if (key == "max_words") cfg.max_words = as<int>(value, key);
    else if (key == "max_depth") cfg.max_depth = as<int>(value, key);
    else throw contract_error("unknown summary config key '" + key + "'");
  }
}

inline void parse_ratios(const nlohmann::json& j, SplitRatios& r) {
  for (const auto& [key, value] : j.items()) {
    if (key == "train") r.train = as<double>(value, key);
    else if (key == "validation") r.validation = as<double>(value, key);
    else if (key == "test") r.test = as<double>(value, key);
    else throw contract_error("unknown split config key '" + key + "'");
  }
}

inline void parse_baseline(const nlohmann::json& j, BaselineConfig& cfg) {
  for (const auto& [key, value] : j.items()) {
    if (key == "ngram_min") cfg.ngram_min = as<int>(value, key);
    else if (key == "ngram_max") cfg.ngram_max = as<int>(value, key);
    else if (key == "min_document_frequency") cfg.min_document_frequency = as<int>(value, key);
    else if (key == "regularization_strength") cfg.regularization_strength = as<double>(value, key);
    else if (key == "convergence_tolerance") cfg.convergence_tolerance = as<double>(value, key);
    else if (key == "max_iterations") cfg.max_iterations = as<int>(value, key);
    else if (key == "seed") cfg.seed = as<uint64_t>(value, key);
    else throw contract_error("unknown baseline config key '" + key + "'");
  }
}

inline void parse_transformer(const nlohmann::json& j, TransformerConfig& cfg) {
  for (const auto& [key, value] : j.items()) {
    if (key == "vocabulary_size") cfg.vocabulary_size = as<int>(value, key);
    else if (key == "embedding_size") cfg.embedding_size = as<int>(value, key);
    else if (key == "hidden_size") cfg.hidden_size = as<int>(value, key);
    else if (key == "num_hidden_layers") cfg.num_hidden_layers = as<int>(value, key);
    else if (key == "num_attention_heads") cfg.num_attention_heads = as<int>(value, key);
    else if (key == "intermediate_size") cfg.intermediate_size = as<int>(value, key);
    else if (key == "max_position_embeddings") cfg.max_position_embeddings = as<int>(value, key);
    else if (key == "hidden_activation") cfg.hidden_activation = as<std::string>(value, key);
    else if (key == "hidden_dropout") cfg.hidden_dropout = as<double>(value, key);
    else if (key == "attention_dropout") cfg.attention_dropout = as<double>(value, key);
    else if (key == "summary_activation") cfg.summary_activation = as<std::string>(value, key);
    else if (key == "summary_last_dropout") cfg.summary_last_dropout = as<double>(value, key);
    else throw contract_error("unknown transformer config key '" + key + "'");
  }
}

inline void parse_finetune(const nlohmann::json& j, FinetuneConfig& cfg) {
  for (const auto& [key, value] : j.items()) {
    if (key == "learning_rate") cfg.learning_rate = as<double>(value, key);
    else if (key == "batch_size") cfg.batch_size = as<int>(value, key);
    else if (key == "epochs") cfg.epochs = as<int>(value, key);
    else if (key == "weight_decay") cfg.weight_decay = as<double>(value, key);
    else if (key == "warmup_fraction") cfg.warmup_fraction = as<double>(value, key);
    else if (key == "max_sequence_tokens") cfg.max_sequence_tokens = as<int>(value, key);
    else if (key == "seed") cfg.seed = as<uint64_t>(value, key);
    else throw contract_error("unknown finetune config key '" + key + "'");
  }
}

inline nlohmann::ordered_json summary_json(const SummaryConfig& c) {
  return {{"trigger_words", c.trigger_words},
          {"min_words", c.min_words},
          {"max_words", c.max_words},
          {"max_depth", c.max_depth}};
}

inline nlohmann::ordered_json ratios_json(const SplitRatios& r) {
  return {{"train", r.train}, {"validation", r.validation}, {"test", r.test}};
}

inline nlohmann::ordered_json baseline_json(const BaselineConfig& c) {
  return {{"ngram_min", c.ngram_min},
          {"ngram_max", c.ngram_max},
          {"min_document_frequency", c.min_document_frequency},
          {"regularization_strength", c.regularization_strength},
          {"convergence_tolerance", c.convergence_tolerance},
          {"max_iterations", c.max_iterations},
          {"seed", c.seed}};
}

inline nlohmann::ordered_json transformer_json(const TransformerConfig& c) {
  return {{"vocabulary_size", c.vocabulary_size},
          {"embedding_size", c.embedding_size},
          {"hidden_size", c.hidden_size},
          {"num_hidden_layers", c.num_hidden_layers},
          {"num_attention_heads", c.num_attention_heads},
          {"intermediate_size", c.intermediate_size},
          {"max_position_embeddings", c.max_position_embeddings},
          {"hidden_activation", c.hidden_activation},
          {"hidden_dropout", c.hidden_dropout},
          {"attention_dropout", c.attention_dropout},
          {"summary_activation", c.summary_activation},
          {"summary_last_dropout", c.summary_last_dropout}};
}

inline nlohmann::ordered_json finetune_json(const FinetuneConfig& c) {
  return {{"learning_rate", c.learning_rate},
          {"batch_size", c.batch_size},
          {"epochs", c.epochs},
          {"weight_decay", c.weight_decay},
          {"warmup_fraction", c.warmup_fraction},
          {"max_sequence_tokens", c.max_sequence_tokens},
          {"seed", c.seed}};
}

inline nlohmann::ordered_json service_json(const ServiceConfig& c) {
  return {{"port", c.port},
          {"model_path", c.model_path},
          {"preprocess", c.preprocess},
          {"decision_threshold", c.decision_threshold},
          {"webhook_url", c.webhook_url},
          {"webhook_min_confidence", c.webhook_min_confidence},
          {"max_request_chars", c.max_request_chars}};
}

}  // namespace pipeline_detail

inline PipelineConfig pipeline_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw contract_error("pipeline config must be a json object");
  PipelineConfig cfg;
  using namespace pipeline_detail;
  for (const auto& [key, value] : j.items()) {
    if (key == "data_dir") cfg.data_dir = as<std::string>(value, key);
    else if (key == "dedup_exact_text") cfg.dedup_exact_text = as<bool>(value, key);
    else if (key == "spell_fix") cfg.spell_fix = as<bool>(value, key);
    else if (key == "summary") parse_summary(value, cfg.summary);
    else if (key == "max_record_words") cfg.max_record_words = as<int>(value, key);
    else if (key == "split") parse_ratios(value, cfg.ratios);
    else if (key == "baseline") parse_baseline(value, cfg.baseline);
    else if (key == "transformer") parse_transformer(value, cfg.transformer);
    else if (key == "finetune") parse_finetune(value, cfg.finetune);
    else if (key == "checkpoint_dir") cfg.checkpoint_dir = as<std::string>(value, key);
    else if (key == "service") cfg.service = service_config_from_json(value);
    else throw contract_error("unknown pipeline config key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

inline PipelineConfig load_pipeline_config(const std::string& path) {
  if (!file_exists(path)) throw env_error("config file not found: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception&) {
    throw contract_error("pipeline config is not valid json: " + path);
  }
  return pipeline_config_from_json(j);
}

inline nlohmann::ordered_json pipeline_config_json(const PipelineConfig& c) {
  using namespace pipeline_detail;
  return {{"data_dir", c.data_dir},
          {"dedup_exact_text", c.dedup_exact_text},
          {"spell_fix", c.spell_fix},
          {"summary", summary_json(c.summary)},
          {"max_record_words", c.max_record_words},
          {"split", ratios_json(c.ratios)},
          {"baseline", baseline_json(c.baseline)},
          {"transformer", transformer_json(c.transformer)},
          {"finetune", finetune_json(c.finetune)},
          {"checkpoint_dir", c.checkpoint_dir},
          {"service", service_json(c.service)}};
}

// One manifest per command invocation. Deliberately separate from the
// deterministic split_manifest.json: run manifests carry timestamps and
// timings, so reruns compare stage outputs while ignoring this file.
struct RunManifest {
  std::string command;
  nlohmann::ordered_json config;
  std::map<std::string, std::string> input_hashes;  // path -> sha256 of contents
  std::vector<std::string> outputs;                 // paths written, manifest excluded
  uint64_t seed = 0;
  double seconds = 0.0;
};

inline void write_run_manifest(const std::string& dir, const RunManifest& m) {
  nlohmann::ordered_json j;
  j["command"] = m.command;
  j["tool_version"] = kToolVersion;
  j["seed"] = m.seed;
  j["config"] = m.config;
  j["inputs"] = m.input_hashes;
  j["outputs"] = m.outputs;
  j["timings"] = {{"total_seconds", m.seconds}};
  j["created_at"] = utc_timestamp();
  write_file(dir + "/run_manifest.json", j.dump(2) + "\n");
}

// Missing stage input means the pipeline was run out of order: a contract
// violation (exit 1) that names the command to run first, not an environment
// failure.
inline void require_artifact(const std::string& path, const std::string& prior_command) {
  if (!file_exists(path))
    throw contract_error("missing artifact " + path + "; run `sentinel " + prior_command +
                         "` first");
}

inline void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw env_error("cannot create directory " + dir + ": " + ec.message());
}

inline std::string file_hash(const std::string& path) { return sha256_hex(read_file(path)); }

namespace pipeline_detail {

class StageTimer {
 public:
  StageTimer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace pipeline_detail

// Reads the configured raw sources, harmonizes labels, merges, and writes
// corpus.csv plus a per-source tally. `sources` filters by source name; empty
// means all six.
inline RunManifest run_ingest(const PipelineConfig& cfg, const std::vector<std::string>& sources,
                              const std::string& out_dir) {
  using namespace pipeline_detail;
  StageTimer timer;
  cfg.validate();

  auto specs = default_source_specs(cfg.data_dir);
  if (!sources.empty()) {
    // Validate every requested name first so a typo is reported even when it
    // sorts after valid ones.
    for (const auto& name : sources) source_id_from_string(name);
    std::vector<SourceSpec> picked;
    for (const auto& spec : specs) {
      for (const auto& name : sources) {
        if (source_id_from_string(name) == spec.source_id) {
          picked.push_back(spec);
          break;
        }
      }
    }
    specs = std::move(picked);
  }
  if (specs.empty()) throw contract_error("no sources selected for ingest");

  RunManifest manifest;
  manifest.command = "ingest";
  manifest.config = pipeline_config_json(cfg);
  for (const auto& spec : specs) {
    if (!file_exists(spec.path)) throw env_error("raw source file not found: " + spec.path);
    manifest.input_hashes[spec.path] = file_hash(spec.path);
  }

  std::vector<SourceBatch> batches;
  for (const auto& spec : specs) batches.push_back(ingest_source(spec));
  auto [corpus, tally] = merge_corpus(batches, cfg.dedup_exact_text);

  ensure_dir(out_dir);
  write_corpus_csv(out_dir + "/corpus.csv", corpus);
  write_file(out_dir + "/tally.txt", format_tally(tally));
  manifest.outputs = {out_dir + "/corpus.csv", out_dir + "/tally.txt"};
  manifest.seconds = timer.seconds();
  write_run_manifest(out_dir, manifest);
  return manifest;
}

// Summarizes long records, cleans text, and drops records whose original
// length exceeds the word cap. Consumes ingest output.
inline RunManifest run_preprocess(const PipelineConfig& cfg, const std::string& in_dir,
                                  const std::string& out_dir) {
  using namespace pipeline_detail;
  StageTimer timer;
  cfg.validate();
  const std::string corpus_path = in_dir + "/corpus.csv";
  require_artifact(corpus_path, "ingest");

  RunManifest manifest;
  manifest.command = "preprocess";
  manifest.config = pipeline_config_json(cfg);
  manifest.input_hashes[corpus_path] = file_hash(corpus_path);

  auto corpus = read_corpus_csv(corpus_path);
  CleanConfig clean;
  clean.spell_fix = cfg.spell_fix;
  std::vector<ProcessedRecord> processed;
  processed.reserve(corpus.size());
  for (const auto& rec : corpus) {
    std::string summary = recursive_summarize(rec.text, cfg.summary);
    processed.push_back(normalize_record(rec, summary, clean));
  }
  auto kept = filter_outliers(processed, cfg.max_record_words);

  ensure_dir(out_dir);
  write_processed_csv(out_dir + "/corpus.csv", kept);
  {
    char line[160];
    std::snprintf(line, sizeof line,
                  "records in %zu\nrecords out %zu\ndropped over %d words %zu\n", corpus.size(),
                  kept.size(), cfg.max_record_words, processed.size() - kept.size());
    write_file(out_dir + "/preprocess_summary.txt", line);
  }
  manifest.outputs = {out_dir + "/corpus.csv", out_dir + "/preprocess_summary.txt"};
  manifest.seconds = timer.seconds();
  write_run_manifest(out_dir, manifest);
  return manifest;
}

// Stratified train/validation/test split. The same seed and input produce
// byte-identical train/validation/test CSVs and split manifest.
inline RunManifest run_split(const PipelineConfig& cfg, const std::string& in_dir,
                             const std::string& out_dir, uint64_t seed) {
  using namespace pipeline_detail;
  StageTimer timer;
  cfg.validate();
  const std::string corpus_path = in_dir + "/corpus.csv";
  require_artifact(corpus_path, "preprocess");

  RunManifest manifest;
  manifest.command = "split";
  manifest.config = pipeline_config_json(cfg);
  manifest.seed = seed;
  manifest.input_hashes[corpus_path] = file_hash(corpus_path);

  auto corpus = read_processed_csv(corpus_path);
  auto split = split_corpus(corpus, cfg.ratios, seed, /*stratified=*/true);
  ensure_dir(out_dir);
  write_split(out_dir, split);
  manifest.outputs = {out_dir + "/train.csv", out_dir + "/validation.csv", out_dir + "/test.csv",
                      out_dir + "/split_manifest.json"};
  manifest.seconds = timer.seconds();
  write_run_manifest(out_dir, manifest);
  return manifest;
}

// Trains the requested model kind on the split's train set and persists it.
// Validation metrics are stored in the model manifest.
inline RunManifest run_train(const PipelineConfig& cfg, const std::string& split_dir,
                             const std::string& model_kind, const std::string& out_dir,
                             uint64_t seed) {
  using namespace pipeline_detail;
  StageTimer timer;
  cfg.validate();
  if (model_kind != "baseline" && model_kind != "transformer")
    throw contract_error("--model must be 'baseline' or 'transformer', got '" + model_kind + "'");
  for (const char* name : {"/train.csv", "/validation.csv", "/test.csv"})
    require_artifact(split_dir + name, "split");

  RunManifest manifest;
  manifest.command = "train";
  manifest.config = pipeline_config_json(cfg);
  manifest.seed = seed;
  for (const char* name : {"/train.csv", "/validation.csv"})
    manifest.input_hashes[split_dir + name] = file_hash(split_dir + name);

  auto loaded = read_split(split_dir);
  ensure_dir(out_dir);
  if (model_kind == "baseline") {
    BaselineConfig bcfg = cfg.baseline;
    bcfg.seed = seed;
    auto model = BaselineModel::train(loaded.split.train, bcfg);

    std::vector<int> golds, preds;
    for (const auto& rec : loaded.split.validation) {
      auto p = model.predict(rec.cleaned, /*preprocess=*/false);
      if (!p) continue;
      golds.push_back(rec.label);
      preds.push_back(p->label);
    }
    if (!golds.empty()) {
      auto r = compute_metrics(confusion(golds, preds));
      model.set_metrics({{"validation_accuracy", r.accuracy},
                         {"validation_precision", r.precision},
                         {"validation_recall", r.recall},
                         {"validation_f1", r.f1}});
    }
    model.persist(out_dir);
  } else {
    if (!cfg.checkpoint_dir.empty())
      manifest.input_hashes[cfg.checkpoint_dir + "/manifest.json"] =
          file_exists(cfg.checkpoint_dir + "/manifest.json")
              ? file_hash(cfg.checkpoint_dir + "/manifest.json")
              : "missing";
    FinetuneConfig fcfg = cfg.finetune;
    fcfg.seed = seed;
    auto model = finetune_transformer(loaded.split.train, loaded.split.validation,
                                      cfg.transformer, fcfg, cfg.checkpoint_dir);
    model.persist(out_dir);
  }
  manifest.outputs = {out_dir + "/manifest.json", out_dir + "/vocab.txt",
                      out_dir + "/weights.bin"};
  manifest.seconds = timer.seconds();
  write_run_manifest(out_dir, manifest);
  return manifest;
}

// Evaluates a persisted model on the split's held-out test set and writes the
// full report bundle (metric table, confusion matrix, per-example outcomes,
// charts).
inline RunManifest run_evaluate(const std::string& split_dir, const std::string& model_dir,
                                const std::string& out_dir) {
  using namespace pipeline_detail;
  StageTimer timer;
  require_artifact(split_dir + "/test.csv", "split");
  require_artifact(model_dir + "/manifest.json", "train");

  RunManifest manifest;
  manifest.command = "evaluate";
  manifest.input_hashes[split_dir + "/test.csv"] = file_hash(split_dir + "/test.csv");
  manifest.input_hashes[model_dir + "/manifest.json"] = file_hash(model_dir + "/manifest.json");
  if (file_exists(model_dir + "/weights.bin"))
    manifest.input_hashes[model_dir + "/weights.bin"] = file_hash(model_dir + "/weights.bin");

  auto model = load_model(model_dir);
  auto test = read_processed_csv(split_dir + "/test.csv");
  ensure_dir(out_dir);
  evaluation_report(*model, test, out_dir);
  manifest.outputs = {out_dir + "/metrics.txt",
                      out_dir + "/confusion_matrix.csv",
                      out_dir + "/confusion_matrix.svg",
                      out_dir + "/per_example.csv",
                      out_dir + "/success_flags.csv",
                      out_dir + "/prediction_density.svg",
                      out_dir + "/word_frequency.csv",
                      out_dir + "/word_frequency.svg",
                      out_dir + "/class_distribution.csv",
                      out_dir + "/class_distribution.svg"};
  manifest.seconds = timer.seconds();
  write_run_manifest(out_dir, manifest);
  return manifest;
}

// Corpus statistics report, optionally folding in a finished evaluation. The
// returned string is the printable report (also written as report.txt); when
// an evaluation directory is given it always includes the computed confusion
// matrix next to the metric table.
inline std::pair<RunManifest, std::string> run_report(const std::string& corpus_dir,
                                                      const std::string& eval_dir,
                                                      const std::string& out_dir) {
  using namespace pipeline_detail;
  StageTimer timer;
  const std::string corpus_path = corpus_dir + "/corpus.csv";
  require_artifact(corpus_path, "preprocess");
  if (!eval_dir.empty()) {
    require_artifact(eval_dir + "/metrics.txt", "evaluate");
    require_artifact(eval_dir + "/confusion_matrix.csv", "evaluate");
  }

  RunManifest manifest;
  manifest.command = "report";
  manifest.input_hashes[corpus_path] = file_hash(corpus_path);

  auto corpus = read_processed_csv(corpus_path);
  auto stats = corpus_stats(corpus, 25);
  ensure_dir(out_dir);

  std::string text = "== corpus ==\n";
  text += "records " + std::to_string(corpus.size()) + "\n";
  {
    std::vector<std::pair<std::string, size_t>> classes = {
        {"non_suicidal", stats.class_counts.count(0) ? stats.class_counts.at(0) : 0},
        {"suicidal", stats.class_counts.count(1) ? stats.class_counts.at(1) : 0}};
    std::string csv = "class,count\n";
    std::vector<std::pair<std::string, double>> bars;
    for (const auto& [name, count] : classes) {
      text += name + " " + std::to_string(count) + "\n";
      csv += name + "," + std::to_string(count) + "\n";
      bars.emplace_back(name, static_cast<double>(count));
    }
    write_file(out_dir + "/class_distribution.csv", csv);
    svg::write_bar_chart(out_dir + "/class_distribution.svg", "records per class", bars);
  }
  {
    std::string csv = "percentile,word_count\n";
    text += "word-count percentiles:";
    for (const auto& [p, w] : stats.word_count_percentiles) {
      csv += std::to_string(p) + "," + std::to_string(w) + "\n";
      text += " p" + std::to_string(p) + "=" + std::to_string(w);
    }
    text += "\n";
    write_file(out_dir + "/length_percentiles.csv", csv);
  }
  {
    std::string csv = "word,count\n";
    std::vector<std::pair<std::string, double>> bars;
    for (const auto& [word, count] : stats.top_words) {
      csv += word + "," + std::to_string(count) + "\n";
      bars.emplace_back(word, static_cast<double>(count));
    }
    write_file(out_dir + "/word_frequency.csv", csv);
    svg::write_bar_chart(out_dir + "/word_frequency.svg", "most frequent words", bars);
  }
  manifest.outputs = {out_dir + "/class_distribution.csv", out_dir + "/class_distribution.svg",
                      out_dir + "/length_percentiles.csv", out_dir + "/word_frequency.csv",
                      out_dir + "/word_frequency.svg"};

  if (!eval_dir.empty()) {
    manifest.input_hashes[eval_dir + "/metrics.txt"] = file_hash(eval_dir + "/metrics.txt");
    manifest.input_hashes[eval_dir + "/confusion_matrix.csv"] =
        file_hash(eval_dir + "/confusion_matrix.csv");

    auto lines = split(read_file(eval_dir + "/confusion_matrix.csv"), '\n');
    std::vector<std::string> cells;
    if (lines.size() >= 2) cells = split(lines[1], ',');
    if (cells.size() < 4)
      throw contract_error("confusion_matrix.csv must have a header and one row of tp,fp,tn,fn");
    const std::string &tp = cells[0], &fp = cells[1], &tn = cells[2], &fn = cells[3];
    text += "\n== evaluation ==\n";
    text += "confusion matrix (rows = gold, columns = predicted):\n";
    text += "                    pred_suicidal  pred_non_suicidal\n";
    text += "gold_suicidal       " + tp + std::string(tp.size() < 15 ? 15 - tp.size() : 1, ' ') +
            fn + "\n";
    text += "gold_non_suicidal   " + fp + std::string(fp.size() < 15 ? 15 - fp.size() : 1, ' ') +
            tn + "\n";
    text += "\n" + read_file(eval_dir + "/metrics.txt");
  }

  write_file(out_dir + "/report.txt", text);
  manifest.outputs.push_back(out_dir + "/report.txt");
  manifest.seconds = timer.seconds();
  write_run_manifest(out_dir, manifest);
  return {manifest, text};
}

}  // namespace sentinel
