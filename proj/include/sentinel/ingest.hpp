#pragma once

// Source loading and label harmonization: six differently-shaped public
// datasets come in, one binary-labeled corpus comes out. Per-source label
// mappings live in data (SourceSpec), not code, so a dataset-version change
// is a spec edit rather than a rebuild.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "sentinel/common.hpp"
#include "sentinel/csv.hpp"
#include "sentinel/records.hpp"

namespace sentinel {

enum class LabelOutcome { SUICIDAL, NON_SUICIDAL, DISCARD };

// One mapping rule: raw value in a named column -> outcome. A rule with an
// empty column is a catch-all that matches every row (used by the source
// whose rows are all positive by construction).
struct LabelRule {
  std::string column;
  std::string value;
  LabelOutcome outcome = LabelOutcome::DISCARD;

  bool is_catch_all() const { return column.empty(); }
};

struct SourceSpec {
  SourceId source_id{};
  std::string path;
  csv::Dialect format{};
  std::string text_column;
  std::vector<std::string> label_columns;
  std::vector<LabelRule> mapping;
  // Optional language gate (empty column = off). Rows whose lang column
  // differs from required_lang are discarded when filter_lang is true.
  std::string lang_column;
  std::string required_lang = "en";
  bool filter_lang = true;
};

struct SourceTally {
  size_t rows_read = 0;
  size_t kept_suicidal = 0;
  size_t kept_non_suicidal = 0;
  size_t discarded = 0;
  size_t malformed = 0;

  size_t kept() const { return kept_suicidal + kept_non_suicidal; }
  bool balanced() const { return kept() + discarded + malformed == rows_read; }
};

struct IngestTally {
  std::map<std::string, SourceTally> per_source;  // keyed by source name
  size_t duplicates_removed = 0;

  SourceTally totals() const {
    SourceTally t;
    for (const auto& [_, s] : per_source) {
      t.rows_read += s.rows_read;
      t.kept_suicidal += s.kept_suicidal;
      t.kept_non_suicidal += s.kept_non_suicidal;
      t.discarded += s.discarded;
      t.malformed += s.malformed;
    }
    return t;
  }
};

// A source's harmonized output plus its bookkeeping.
struct SourceBatch {
  SourceId source_id{};
  std::vector<HarmonizedRecord> records;
  SourceTally tally;
};

namespace ingest_detail {

// Exact string match after trimming, with a numeric fallback so "04" and
// "4" compare equal for integer-coded labels.
inline bool label_value_equal(const std::string& raw, const std::string& rule_value) {
  std::string a = trim(raw), b = trim(rule_value);
  if (a == b) return true;
  auto as_int = [](const std::string& s) -> std::optional<long long> {
    if (s.empty()) return std::nullopt;
    size_t pos = 0;
    try {
      long long v = std::stoll(s, &pos);
      if (pos != s.size()) return std::nullopt;
      return v;
    } catch (...) {
      return std::nullopt;
    }
  };
  auto ia = as_int(a), ib = as_int(b);
  return ia && ib && *ia == *ib;
}

}  // namespace ingest_detail

// Reads one source file into raw records. Rows with a missing/empty text
// cell still come through (text == "") so harmonization can tally them.
inline std::vector<RawRecord> load_source(const SourceSpec& spec) {
  csv::Table table = csv::Table::parse_file(spec.path, spec.format);

  auto require_column = [&](const std::string& name) {
    if (table.column_index(name) < 0)
      throw contract_error(std::string(to_string(spec.source_id)) + ": column '" + name +
                           "' missing from " + spec.path);
    return table.column_index(name);
  };
  int text_col = require_column(spec.text_column);
  std::vector<int> label_cols;
  for (const auto& c : spec.label_columns) label_cols.push_back(require_column(c));
  int lang_col = spec.lang_column.empty() ? -1 : require_column(spec.lang_column);

  std::vector<RawRecord> out;
  out.reserve(table.size());
  for (size_t i = 0; i < table.size(); ++i) {
    RawRecord r;
    r.source_id = spec.source_id;
    r.row_index = i;
    r.text = table.field(i, text_col);
    for (size_t c = 0; c < label_cols.size(); ++c)
      r.raw_labels[spec.label_columns[c]] = table.field(i, label_cols[c]);
    if (lang_col >= 0) r.raw_labels[spec.lang_column] = table.field(i, lang_col);
    out.push_back(std::move(r));
  }
  return out;
}

enum class HarmonizeKind { KEPT, DISCARDED, MALFORMED };

struct HarmonizeResult {
  HarmonizeKind kind = HarmonizeKind::DISCARDED;
  HarmonizedRecord record;  // meaningful only when kind == KEPT
};

// Applies the source's label mapping to one raw record. Empty text beats
// everything (malformed); the language gate beats the label rules; an
// observed label value that matches no rule is a hard error, never a silent
// drop.
inline HarmonizeResult harmonize_record(const RawRecord& record, const SourceSpec& spec) {
  HarmonizeResult res;
  if (trim(record.text).empty()) {
    res.kind = HarmonizeKind::MALFORMED;
    return res;
  }
  if (!spec.lang_column.empty() && spec.filter_lang) {
    auto it = record.raw_labels.find(spec.lang_column);
    std::string lang = it == record.raw_labels.end() ? "" : trim(it->second);
    if (lang != spec.required_lang) {
      res.kind = HarmonizeKind::DISCARDED;
      return res;
    }
  }
  for (const auto& rule : spec.mapping) {
    bool matches = false;
    if (rule.is_catch_all()) {
      matches = true;
    } else {
      auto it = record.raw_labels.find(rule.column);
      if (it != record.raw_labels.end())
        matches = ingest_detail::label_value_equal(it->second, rule.value);
    }
    if (!matches) continue;
    switch (rule.outcome) {
      case LabelOutcome::DISCARD:
        res.kind = HarmonizeKind::DISCARDED;
        return res;
      case LabelOutcome::SUICIDAL:
      case LabelOutcome::NON_SUICIDAL:
        res.kind = HarmonizeKind::KEPT;
        res.record = HarmonizedRecord{record.source_id, record.text,
                                      rule.outcome == LabelOutcome::SUICIDAL ? 1 : 0};
        return res;
    }
  }
  std::string observed;
  for (const auto& col : spec.label_columns) {
    auto it = record.raw_labels.find(col);
    observed += (observed.empty() ? "" : ", ") + col + "='" +
                (it == record.raw_labels.end() ? "" : it->second) + "'";
  }
  throw contract_error(std::string(to_string(spec.source_id)) + " row " +
                       std::to_string(record.row_index) + ": no mapping rule for " + observed);
}

// load + harmonize one source, producing the kept records and the tally.
inline SourceBatch ingest_source(const SourceSpec& spec) {
  SourceBatch batch;
  batch.source_id = spec.source_id;
  for (const RawRecord& raw : load_source(spec)) {
    ++batch.tally.rows_read;
    HarmonizeResult res = harmonize_record(raw, spec);
    switch (res.kind) {
      case HarmonizeKind::KEPT:
        (res.record.label == 1 ? batch.tally.kept_suicidal : batch.tally.kept_non_suicidal)++;
        batch.records.push_back(std::move(res.record));
        break;
      case HarmonizeKind::DISCARDED:
        ++batch.tally.discarded;
        break;
      case HarmonizeKind::MALFORMED:
        ++batch.tally.malformed;
        break;
    }
  }
  return batch;
}

// Concatenates per-source batches in order. Optional exact-duplicate text
// removal is OFF by default to keep corpus counts comparable; switching it
// on mitigates cross-source train/test leakage.
inline std::pair<std::vector<HarmonizedRecord>, IngestTally> merge_corpus(
    const std::vector<SourceBatch>& batches, bool dedup_exact_text = false) {
  std::vector<HarmonizedRecord> corpus;
  IngestTally tally;
  std::unordered_set<std::string> seen;
  for (const auto& b : batches) {
    SourceTally& t = tally.per_source[to_string(b.source_id)];
    t.rows_read += b.tally.rows_read;
    t.kept_suicidal += b.tally.kept_suicidal;
    t.kept_non_suicidal += b.tally.kept_non_suicidal;
    t.discarded += b.tally.discarded;
    t.malformed += b.tally.malformed;
    for (const auto& r : b.records) {
      if (dedup_exact_text && !seen.insert(r.text).second) {
        ++tally.duplicates_removed;
        // keep per-source kept counts honest: the duplicate is not in the corpus
        (r.label == 1 ? t.kept_suicidal : t.kept_non_suicidal)--;
        ++t.discarded;
        continue;
      }
      corpus.push_back(r);
    }
  }
  return {corpus, tally};
}

// The six paper sources at their default locations under data_dir.
inline std::vector<SourceSpec> default_source_specs(const std::string& data_dir) {
  std::vector<SourceSpec> specs;

  {
    SourceSpec s;
    s.source_id = SourceId::TDA;
    s.path = data_dir + "/tda.csv";
    s.text_column = "Post";
    s.label_columns = {"Label"};
    s.mapping = {{"Label", "Attempt", LabelOutcome::SUICIDAL},
                 {"Label", "Ideation", LabelOutcome::SUICIDAL},
                 {"Label", "Supportive", LabelOutcome::NON_SUICIDAL},
                 {"Label", "Behavior", LabelOutcome::NON_SUICIDAL},
                 {"Label", "Indicator", LabelOutcome::NON_SUICIDAL}};
    specs.push_back(std::move(s));
  }
  {
    SourceSpec s;
    s.source_id = SourceId::AG;
    s.path = data_dir + "/ag.csv";
    s.text_column = "Post";
    // Sentiment_Label is parsed for provenance but has no mapping rule:
    // sentiment had negligible correlation with suicidality.
    s.label_columns = {"Suicidal_Label", "Sentiment_Label"};
    s.mapping = {{"Suicidal_Label", "0", LabelOutcome::SUICIDAL},
                 {"Suicidal_Label", "1", LabelOutcome::NON_SUICIDAL}};
    specs.push_back(std::move(s));
  }
  {
    SourceSpec s;
    s.source_id = SourceId::IMS;
    s.path = data_dir + "/ims.csv";
    s.text_column = "Post";
    s.label_columns = {"Label"};
    s.mapping = {{"Label", "Suicidal", LabelOutcome::SUICIDAL},
                 {"Label", "Non-Suicidal", LabelOutcome::NON_SUICIDAL}};
    specs.push_back(std::move(s));
  }
  {
    // Column names are not documented anywhere; this mapping is the
    // best-effort inference and deliberately lives here, in data, so a
    // correction never requires touching harmonization code.
    SourceSpec s;
    s.source_id = SourceId::LAX;
    s.path = data_dir + "/lax.csv";
    s.text_column = "tweet";
    s.label_columns = {"intention"};
    s.mapping = {{"intention", "1", LabelOutcome::SUICIDAL},
                 {"intention", "0", LabelOutcome::NON_SUICIDAL}};
    specs.push_back(std::move(s));
  }
  {
    SourceSpec s;
    s.source_id = SourceId::MSH;
    s.path = data_dir + "/msh.csv";
    s.text_column = "text";
    s.label_columns = {};  // every row is positive by construction
    s.mapping = {{"", "", LabelOutcome::SUICIDAL}};
    specs.push_back(std::move(s));
  }
  {
    SourceSpec s;
    s.source_id = SourceId::NTL;
    s.path = data_dir + "/ntl.csv";
    s.text_column = "full_text";
    s.label_columns = {"label"};
    s.lang_column = "lang";
    s.mapping = {{"label", "0", LabelOutcome::SUICIDAL},
                 {"label", "1", LabelOutcome::SUICIDAL},
                 {"label", "2", LabelOutcome::NON_SUICIDAL},
                 {"label", "4", LabelOutcome::NON_SUICIDAL},
                 {"label", "3", LabelOutcome::DISCARD}};
    specs.push_back(std::move(s));
  }
  return specs;
}

// ---------------------------------------------------------------------------
// Corpus and tally persistence.

inline void write_corpus_csv(const std::string& path,
                             const std::vector<HarmonizedRecord>& corpus) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw env_error("cannot write corpus: " + path);
  out << "source_id,text,label\n";
  for (const auto& r : corpus)
    csv::write_record(out, {to_string(r.source_id), r.text, std::to_string(r.label)});
  if (!out) throw env_error("short write: " + path);
}

inline std::vector<HarmonizedRecord> read_corpus_csv(const std::string& path) {
  csv::Table t = csv::Table::parse_file(path);
  int src = t.column_index("source_id"), text = t.column_index("text"),
      label = t.column_index("label");
  if (src < 0 || text < 0 || label < 0)
    throw contract_error("corpus file lacks source_id/text/label columns: " + path);
  std::vector<HarmonizedRecord> out;
  out.reserve(t.size());
  for (size_t i = 0; i < t.size(); ++i) {
    HarmonizedRecord r;
    r.source_id = source_id_from_string(t.field(i, src));
    r.text = t.field(i, text);
    std::string lab = trim(t.field(i, label));
    if (lab != "0" && lab != "1")
      throw contract_error("corpus label must be 0/1, got '" + lab + "' at row " +
                           std::to_string(i));
    r.label = lab == "1" ? 1 : 0;
    out.push_back(std::move(r));
  }
  return out;
}

// Tally report: stable key-value lines, greppable and diffable.
inline std::string format_tally(const IngestTally& tally) {
  std::string out;
  auto line = [&](const std::string& key, size_t v) {
    out += key + " " + std::to_string(v) + "\n";
  };
  for (const auto& [name, t] : tally.per_source) {
    line(name + ".rows_read", t.rows_read);
    line(name + ".kept_suicidal", t.kept_suicidal);
    line(name + ".kept_non_suicidal", t.kept_non_suicidal);
    line(name + ".discarded", t.discarded);
    line(name + ".malformed", t.malformed);
  }
  SourceTally tot = tally.totals();
  line("total.rows_read", tot.rows_read);
  line("total.kept_suicidal", tot.kept_suicidal);
  line("total.kept_non_suicidal", tot.kept_non_suicidal);
  line("total.discarded", tot.discarded);
  line("total.malformed", tot.malformed);
  line("total.duplicates_removed", tally.duplicates_removed);
  return out;
}

}  // namespace sentinel
