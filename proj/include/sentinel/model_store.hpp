#pragma once

// Opens a persisted model directory and dispatches on the manifest's "kind"
// so callers (service, CLI, evaluation) stay agnostic of the concrete model.

#include <memory>
#include <string>

#include <json.hpp>

#include "sentinel/baseline.hpp"
#include "sentinel/common.hpp"
#include "sentinel/electra.hpp"
#include "sentinel/model.hpp"

namespace sentinel {

inline std::unique_ptr<Classifier> load_model(const std::string& dir) {
  std::string manifest_path = dir + "/manifest.json";
  if (!file_exists(manifest_path))
    throw env_error("no model manifest at " + manifest_path);
  nlohmann::json m;
  try {
    m = nlohmann::json::parse(read_file(manifest_path));
  } catch (const nlohmann::json::exception& e) {
    throw contract_error("model manifest is not valid json: " + std::string(e.what()));
  }
  if (!m.contains("kind"))
    throw contract_error("model manifest missing field 'kind'");
  std::string kind = m["kind"].get<std::string>();
  if (kind == "baseline")
    return std::make_unique<BaselineModel>(BaselineModel::load(dir));
  if (kind == "electra")
    return std::make_unique<ElectraModel>(ElectraModel::load(dir));
  throw contract_error("unknown model kind '" + kind + "'");
}

}  // namespace sentinel
