// Command-line front end for the pipeline: ingest -> preprocess -> split ->
// train -> evaluate -> report, plus a blocking `serve`. Exit codes: 0 on
// success, 1 on contract violations (bad flags, malformed config, stages run
// out of order), 2 on environment failures (missing raw data or checkpoints,
// unwritable paths). Every command drops a run_manifest.json in its output
// directory recording config, hashed inputs, outputs, seed, and timing.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sentinel/pipeline.hpp"
#include "sentinel/service.hpp"

namespace {

sentinel::PipelineConfig load_config(const std::string& path) {
  if (path.empty()) return {};
  return sentinel::load_pipeline_config(path);
}

std::vector<std::string> parse_sources(const std::string& csv) {
  std::vector<std::string> out;
  for (const auto& part : sentinel::split(csv, ',')) {
    std::string name = sentinel::trim(part);
    if (!name.empty()) out.push_back(name);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"suicidality text classifier: data pipeline, training, and serving"};
  app.set_version_flag("--version", std::string(sentinel::kToolVersion));
  app.require_subcommand(1);

  std::string ing_config, ing_out = "out/ingest", ing_sources;
  uint64_t ing_seed = 42;
  auto* ingest = app.add_subcommand("ingest", "read raw sources into the harmonized corpus");
  ingest->add_option("--config", ing_config, "pipeline config file (json)");
  ingest->add_option("--seed", ing_seed, "recorded in the run manifest");
  ingest->add_option("--out", ing_out, "output directory");
  ingest->add_option("--sources", ing_sources, "comma-separated source subset (default: all)");

  std::string pre_in, pre_config, pre_out = "out/preprocess";
  uint64_t pre_seed = 42;
  auto* preprocess =
      app.add_subcommand("preprocess", "summarize, clean, and drop over-long records");
  preprocess->add_option("ingest_dir", pre_in, "directory written by `sentinel ingest`")
      ->required();
  preprocess->add_option("--config", pre_config, "pipeline config file (json)");
  preprocess->add_option("--seed", pre_seed, "recorded in the run manifest");
  preprocess->add_option("--out", pre_out, "output directory");

  std::string spl_in, spl_config, spl_out = "out/split";
  uint64_t spl_seed = 42;
  auto* split = app.add_subcommand("split", "stratified train/validation/test split");
  split->add_option("corpus_dir", spl_in, "directory written by `sentinel preprocess`")
      ->required();
  split->add_option("--config", spl_config, "pipeline config file (json)");
  split->add_option("--seed", spl_seed, "shuffle seed");
  split->add_option("--out", spl_out, "output directory");

  std::string trn_in, trn_config, trn_out = "out/model", trn_model = "baseline";
  uint64_t trn_seed = 42;
  auto* train = app.add_subcommand("train", "fit a model on the training split");
  train->add_option("split_dir", trn_in, "directory written by `sentinel split`")->required();
  train->add_option("--config", trn_config, "pipeline config file (json)");
  train->add_option("--seed", trn_seed, "training seed");
  train->add_option("--model", trn_model, "baseline | transformer")
      ->check(CLI::IsMember({"baseline", "transformer"}));
  train->add_option("--out", trn_out, "output directory");

  std::string evl_split, evl_model, evl_config, evl_out = "out/eval";
  uint64_t evl_seed = 42;
  auto* evaluate = app.add_subcommand("evaluate", "score a trained model on the test split");
  evaluate->add_option("split_dir", evl_split, "directory written by `sentinel split`")
      ->required();
  evaluate->add_option("model_dir", evl_model, "directory written by `sentinel train`")
      ->required();
  evaluate->add_option("--config", evl_config, "pipeline config file (json)");
  evaluate->add_option("--seed", evl_seed, "recorded in the run manifest");
  evaluate->add_option("--out", evl_out, "output directory");

  std::string rep_corpus, rep_eval, rep_config, rep_out = "out/report";
  uint64_t rep_seed = 42;
  auto* report = app.add_subcommand("report", "corpus statistics, plus evaluation if available");
  report->add_option("corpus_dir", rep_corpus, "directory written by `sentinel preprocess`")
      ->required();
  report->add_option("eval_dir", rep_eval, "directory written by `sentinel evaluate` (optional)");
  report->add_option("--config", rep_config, "pipeline config file (json)");
  report->add_option("--seed", rep_seed, "recorded in the run manifest");
  report->add_option("--out", rep_out, "output directory");

  std::string srv_model, srv_config, srv_out = "out/serve";
  uint64_t srv_seed = 42;
  int srv_port = 0;
  auto* serve = app.add_subcommand("serve", "run the classification API until signaled");
  serve->add_option("model_dir", srv_model, "directory written by `sentinel train`");
  serve->add_option("--config", srv_config, "pipeline config file (json)");
  serve->add_option("--seed", srv_seed, "recorded in the run manifest");
  serve->add_option("--port", srv_port, "listen port (overrides config)");
  serve->add_option("--out", srv_out, "run manifest directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; anything else is a usage contract error.
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*ingest) {
      auto cfg = load_config(ing_config);
      auto m = sentinel::run_ingest(cfg, parse_sources(ing_sources), ing_out);
      std::printf("ingest: %zu inputs -> %s (%.2fs)\n", m.input_hashes.size(), ing_out.c_str(),
                  m.seconds);
    } else if (*preprocess) {
      auto cfg = load_config(pre_config);
      auto m = sentinel::run_preprocess(cfg, pre_in, pre_out);
      std::printf("preprocess: -> %s (%.2fs)\n", pre_out.c_str(), m.seconds);
    } else if (*split) {
      auto cfg = load_config(spl_config);
      auto m = sentinel::run_split(cfg, spl_in, spl_out, spl_seed);
      std::printf("split: seed %llu -> %s (%.2fs)\n",
                  static_cast<unsigned long long>(spl_seed), spl_out.c_str(), m.seconds);
    } else if (*train) {
      auto cfg = load_config(trn_config);
      auto m = sentinel::run_train(cfg, trn_in, trn_model, trn_out, trn_seed);
      std::printf("train: %s model -> %s (%.2fs)\n", trn_model.c_str(), trn_out.c_str(),
                  m.seconds);
    } else if (*evaluate) {
      (void)load_config(evl_config);  // honored for symmetry; evaluation needs no knobs
      auto m = sentinel::run_evaluate(evl_split, evl_model, evl_out);
      std::printf("evaluate: -> %s (%.2fs)\n", evl_out.c_str(), m.seconds);
      std::fputs(sentinel::read_file(evl_out + "/metrics.txt").c_str(), stdout);
    } else if (*report) {
      (void)load_config(rep_config);
      auto [m, text] = sentinel::run_report(rep_corpus, rep_eval, rep_out);
      std::fputs(text.c_str(), stdout);
    } else if (*serve) {
      auto cfg = load_config(srv_config);
      sentinel::ServiceConfig sc = cfg.service;
      if (!srv_model.empty()) sc.model_path = srv_model;
      if (srv_port != 0) sc.port = srv_port;
      sentinel::apply_env_overrides(sc);  // env vars win over file and flags
      if (sc.model_path.empty())
        throw sentinel::contract_error(
            "serve needs a model: pass MODEL_DIR or set model_path / SENTINEL_MODEL_PATH");
      sentinel::require_artifact(sc.model_path + "/manifest.json", "train");

      sentinel::RunManifest m;
      m.command = "serve";
      m.config = sentinel::pipeline_config_json(cfg);
      m.config["service"] = sentinel::pipeline_detail::service_json(sc);
      m.seed = srv_seed;
      m.input_hashes[sc.model_path + "/manifest.json"] =
          sentinel::file_hash(sc.model_path + "/manifest.json");
      sentinel::ensure_dir(srv_out);
      sentinel::write_run_manifest(srv_out, m);

      sentinel::ClassifyService service(sc);
      service.load_model_from_path();
      std::printf("serving %s on port %d\n", sc.model_path.c_str(), sc.port);
      std::fflush(stdout);
      if (!service.listen()) throw sentinel::env_error("cannot listen on port " +
                                                       std::to_string(sc.port));
    }
  } catch (const sentinel::contract_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const sentinel::env_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
