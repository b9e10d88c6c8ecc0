#pragma once

// Minimal deterministic SVG emission for the evaluation report. Charts here
// are companions to the raw data tables written next to them -- nothing
// downstream parses these files, so the drawing stays simple on purpose.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "sentinel/common.hpp"

namespace sentinel::svg {

inline std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

class Document {
public:
  Document(int width, int height) : w_(width), h_(height) {
    body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w_) +
             "\" height=\"" + std::to_string(h_) + "\" viewBox=\"0 0 " + std::to_string(w_) +
             " " + std::to_string(h_) + "\">\n";
    body_ += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  void rect(double x, double y, double w, double h, const std::string& fill) {
    body_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) +
             "\" height=\"" + num(h) + "\" fill=\"" + fill + "\"/>\n";
  }

  void line(double x1, double y1, double x2, double y2, const std::string& stroke) {
    body_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
             num(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"1\"/>\n";
  }

  void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke) {
    body_ += "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : pts) body_ += num(x) + "," + num(y) + " ";
    body_ += "\"/>\n";
  }

  void text(double x, double y, const std::string& s, int size = 12,
            const std::string& anchor = "start") {
    body_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" " +
             "font-size=\"" + std::to_string(size) + "\" text-anchor=\"" + anchor + "\">" +
             escape(s) + "</text>\n";
  }

  void save(const std::string& path) {
    write_file(path, body_ + "</svg>\n");
  }

private:
  int w_, h_;
  std::string body_;
};

// Horizontal bar chart; used for word frequency and class distribution.
inline void write_bar_chart(const std::string& path, const std::string& title,
                            const std::vector<std::pair<std::string, double>>& bars) {
  const int row_h = 22, left = 140, width = 640;
  int height = 50 + row_h * static_cast<int>(bars.size());
  Document doc(width, height);
  doc.text(width / 2.0, 22, title, 14, "middle");
  double max_v = 1.0;
  for (const auto& [label, v] : bars) max_v = std::max(max_v, v);
  double y = 40;
  for (const auto& [label, v] : bars) {
    double bw = (width - left - 60) * (v / max_v);
    doc.text(left - 8, y + 14, label, 11, "end");
    doc.rect(left, y + 3, bw, row_h - 8, "#4878a8");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", v);
    doc.text(left + bw + 6, y + 14, buf, 11);
    y += row_h;
  }
  doc.save(path);
}

// Two binned polylines over example index: how many correct (+1) and
// incorrect (-1) outcomes fall in each slice of the evaluation stream.
inline void write_outcome_density(const std::string& path, const std::string& title,
                                  const std::vector<int>& flags) {
  const int width = 720, height = 320, left = 60, bottom = 280, top = 46;
  Document doc(width, height);
  doc.text(width / 2.0, 22, title, 14, "middle");
  if (flags.empty()) {
    doc.save(path);
    return;
  }
  size_t bins = std::min<size_t>(flags.size(), 100);
  std::vector<double> good(bins, 0), bad(bins, 0);
  for (size_t i = 0; i < flags.size(); ++i) {
    size_t b = i * bins / flags.size();
    (flags[i] > 0 ? good[b] : bad[b]) += 1;
  }
  double max_c = 1.0;
  for (size_t b = 0; b < bins; ++b) max_c = std::max({max_c, good[b], bad[b]});
  auto to_xy = [&](size_t b, double v) {
    double x = left + (width - left - 30) * (bins == 1 ? 0.5 : double(b) / double(bins - 1));
    double y = bottom - (bottom - top) * (v / max_c);
    return std::pair<double, double>{x, y};
  };
  std::vector<std::pair<double, double>> gp, bp;
  for (size_t b = 0; b < bins; ++b) {
    gp.push_back(to_xy(b, good[b]));
    bp.push_back(to_xy(b, bad[b]));
  }
  doc.line(left, bottom, width - 30, bottom, "#333333");
  doc.line(left, top, left, bottom, "#333333");
  doc.polyline(gp, "#2e7d32");
  doc.polyline(bp, "#c62828");
  doc.text(left, height - 10, "successful (+1) green, failed (-1) red; x: example index bins", 11);
  doc.save(path);
}

// 2x2 confusion grid with counts.
inline void write_confusion_grid(const std::string& path, double tp, double fp, double tn,
                                 double fn) {
  const int cell = 120, left = 140, top = 70;
  Document doc(left + 2 * cell + 40, top + 2 * cell + 50);
  doc.text((left + 2 * cell + 40) / 2.0, 24, "Confusion matrix (positive = suicidal)", 14,
           "middle");
  const char* col[2] = {"predicted 1", "predicted 0"};
  const char* row[2] = {"actual 1", "actual 0"};
  double vals[2][2] = {{tp, fn}, {fp, tn}};
  double max_v = std::max({tp, fp, tn, fn, 1.0});
  for (int c = 0; c < 2; ++c) doc.text(left + cell * c + cell / 2.0, top - 12, col[c], 12, "middle");
  for (int r = 0; r < 2; ++r) {
    doc.text(left - 10, top + cell * r + cell / 2.0, row[r], 12, "end");
    for (int c = 0; c < 2; ++c) {
      int shade = 235 - static_cast<int>(110 * vals[r][c] / max_v);
      char fill[16];
      std::snprintf(fill, sizeof fill, "#%02x%02xe6", shade, shade);
      doc.rect(left + cell * c, top + cell * r, cell - 4, cell - 4, fill);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.0f", vals[r][c]);
      doc.text(left + cell * c + cell / 2.0, top + cell * r + cell / 2.0 + 4, buf, 16, "middle");
    }
  }
  doc.save(path);
}

}  // namespace sentinel::svg
