#pragma once

// Confusion counting, metric computation, and the on-disk evaluation report
// (metric table, confusion matrix, per-example confidences, outcome density,
// word-frequency and class-distribution charts with their data tables).

#include <cstdio>
#include <string>
#include <vector>

#include "sentinel/common.hpp"
#include "sentinel/corpus.hpp"
#include "sentinel/csv.hpp"
#include "sentinel/model.hpp"
#include "sentinel/svg.hpp"
#include "sentinel/textprep.hpp"

namespace sentinel {

struct ConfusionMatrix {
  size_t tp = 0, fp = 0, tn = 0, fn = 0;
  size_t total() const { return tp + fp + tn + fn; }
};

inline ConfusionMatrix confusion(const std::vector<int>& golds, const std::vector<int>& preds) {
  if (golds.size() != preds.size())
    throw contract_error("confusion requires equal-length gold and prediction lists");
  if (golds.empty()) throw contract_error("confusion requires at least one example");
  ConfusionMatrix m;
  for (size_t i = 0; i < golds.size(); ++i) {
    if (golds[i] == 1)
      ++(preds[i] == 1 ? m.tp : m.fn);
    else
      ++(preds[i] == 1 ? m.fp : m.tn);
  }
  return m;
}

struct PerExample {
  std::string cleaned;
  int gold = 0;
  bool rejected = false;  // input normalized to nothing; excluded from the matrix
  Prediction prediction;
};

struct EvalReport {
  ConfusionMatrix matrix;
  double accuracy = 0, precision = 0, recall = 0, f1 = 0, error_rate = 0;
  std::vector<PerExample> per_example;
  std::vector<int> success_flags;  // +1 correct, -1 incorrect (or rejected)
};

// Zero-denominator conventions: precision and recall fall back to 0 instead
// of NaN, and f1 is 0 when both are 0, so automated gates never crash.
inline EvalReport compute_metrics(const ConfusionMatrix& m) {
  if (m.total() == 0) throw contract_error("compute_metrics requires a non-empty matrix");
  EvalReport r;
  r.matrix = m;
  auto d = static_cast<double>(m.total());
  r.accuracy = static_cast<double>(m.tp + m.tn) / d;
  r.precision = m.tp + m.fp == 0 ? 0.0 : static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fp);
  r.recall = m.tp + m.fn == 0 ? 0.0 : static_cast<double>(m.tp) / static_cast<double>(m.tp + m.fn);
  r.f1 = r.precision + r.recall == 0.0 ? 0.0
                                       : 2.0 * r.precision * r.recall / (r.precision + r.recall);
  r.error_rate = 1.0 - r.accuracy;
  return r;
}

namespace eval_detail {

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace eval_detail

// Runs the model over a test split and writes the report artifacts into
// out_dir. Records the model rejects (nothing left after normalization) stay
// in the per-example listing as failures but are not confusion-matrix
// entries, so matrix.total() counts classified examples only.
inline EvalReport evaluation_report(const Classifier& model,
                                    const std::vector<ProcessedRecord>& test,
                                    const std::string& out_dir) {
  if (test.empty()) throw contract_error("evaluation_report requires a non-empty test split");

  std::vector<int> golds, preds;
  std::vector<PerExample> examples;
  std::vector<int> flags;
  examples.reserve(test.size());
  for (const auto& rec : test) {
    PerExample ex;
    ex.cleaned = rec.cleaned;
    ex.gold = rec.label;
    auto p = model.predict(rec.cleaned, /*preprocess=*/false);
    if (p) {
      ex.prediction = *p;
      golds.push_back(rec.label);
      preds.push_back(p->label);
      flags.push_back(p->label == rec.label ? 1 : -1);
    } else {
      ex.rejected = true;
      flags.push_back(-1);
    }
    examples.push_back(std::move(ex));
  }
  if (golds.empty()) throw contract_error("evaluation_report: every test example was rejected");

  EvalReport report = compute_metrics(confusion(golds, preds));
  report.per_example = std::move(examples);
  report.success_flags = std::move(flags);

  using eval_detail::fmt;
  const auto& m = report.matrix;

  std::string metrics;
  metrics += "examples " + std::to_string(test.size()) + "\n";
  metrics += "classified " + std::to_string(m.total()) + "\n";
  metrics += "rejected " + std::to_string(test.size() - m.total()) + "\n";
  metrics += "accuracy " + fmt(report.accuracy) + "\n";
  metrics += "precision " + fmt(report.precision) + "\n";
  metrics += "recall " + fmt(report.recall) + "\n";
  metrics += "f1 " + fmt(report.f1) + "\n";
  metrics += "error_rate " + fmt(report.error_rate) + "\n";
  metrics += "# precision/recall fall back to 0 on a zero denominator; f1 is 0 when both are 0\n";
  write_file(out_dir + "/metrics.txt", metrics);

  {
    std::ofstream out(out_dir + "/confusion_matrix.csv", std::ios::binary);
    out << "tp,fp,tn,fn\n"
        << m.tp << ',' << m.fp << ',' << m.tn << ',' << m.fn << '\n';
  }
  svg::write_confusion_grid(out_dir + "/confusion_matrix.svg", double(m.tp), double(m.fp),
                            double(m.tn), double(m.fn));

  {
    std::ofstream out(out_dir + "/per_example.csv", std::ios::binary);
    out << "cleaned,gold,outcome,label,confidence,p_non_suicidal,p_suicidal,success\n";
    for (size_t i = 0; i < report.per_example.size(); ++i) {
      const auto& ex = report.per_example[i];
      if (ex.rejected) {
        csv::write_record(out, {ex.cleaned, std::to_string(ex.gold), "REJECT", "", "", "", "",
                                std::to_string(report.success_flags[i])});
      } else {
        csv::write_record(out, {ex.cleaned, std::to_string(ex.gold), "CLASSIFIED",
                                std::to_string(ex.prediction.label), fmt(ex.prediction.confidence),
                                fmt(ex.prediction.raw_scores[0]), fmt(ex.prediction.raw_scores[1]),
                                std::to_string(report.success_flags[i])});
      }
    }
  }

  {
    std::ofstream out(out_dir + "/success_flags.csv", std::ios::binary);
    out << "index,flag\n";
    for (size_t i = 0; i < report.success_flags.size(); ++i)
      out << i << ',' << report.success_flags[i] << '\n';
  }
  svg::write_outcome_density(out_dir + "/prediction_density.svg",
                             "Prediction outcomes over the test split", report.success_flags);

  auto stats = corpus_stats(test, 25);
  {
    std::ofstream out(out_dir + "/word_frequency.csv", std::ios::binary);
    out << "word,count\n";
    for (const auto& [w, c] : stats.top_words) csv::write_record(out, {w, std::to_string(c)});
  }
  std::vector<std::pair<std::string, double>> bars;
  for (const auto& [w, c] : stats.top_words) bars.emplace_back(w, double(c));
  svg::write_bar_chart(out_dir + "/word_frequency.svg", "Most frequent cleaned tokens", bars);

  {
    std::ofstream out(out_dir + "/class_distribution.csv", std::ios::binary);
    out << "label,count\n";
    for (const auto& [label, count] : stats.class_counts)
      out << label << ',' << count << '\n';
  }
  std::vector<std::pair<std::string, double>> cls;
  for (const auto& [label, count] : stats.class_counts)
    cls.emplace_back(label == 1 ? "suicidal (1)" : "non-suicidal (0)", double(count));
  svg::write_bar_chart(out_dir + "/class_distribution.svg", "Test split class distribution", cls);

  return report;
}

}  // namespace sentinel
