#pragma once

// Record types shared across the pipeline stages.

#include <cstdint>
#include <map>
#include <string>

#include "sentinel/common.hpp"

namespace sentinel {

// The six corpus sources.
enum class SourceId { TDA, AG, IMS, LAX, MSH, NTL };

inline const char* to_string(SourceId id) {
  switch (id) {
    case SourceId::TDA: return "TDA";
    case SourceId::AG: return "AG";
    case SourceId::IMS: return "IMS";
    case SourceId::LAX: return "LAX";
    case SourceId::MSH: return "MSH";
    case SourceId::NTL: return "NTL";
  }
  return "?";
}

inline SourceId source_id_from_string(const std::string& s) {
  if (s == "TDA") return SourceId::TDA;
  if (s == "AG") return SourceId::AG;
  if (s == "IMS") return SourceId::IMS;
  if (s == "LAX") return SourceId::LAX;
  if (s == "MSH") return SourceId::MSH;
  if (s == "NTL") return SourceId::NTL;
  throw contract_error("unknown source id '" + s + "'");
}

// One data row as read from a source file, before label mapping.
struct RawRecord {
  SourceId source_id{};
  size_t row_index = 0;
  std::string text;
  std::map<std::string, std::string> raw_labels;
};

// One corpus record after label harmonization: binary label, provenance kept.
struct HarmonizedRecord {
  SourceId source_id{};
  std::string text;
  int label = 0;  // 0 = non-suicidal, 1 = suicidal
};

}  // namespace sentinel
