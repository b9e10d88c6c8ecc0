#pragma once

// Minimal delimited-table reader/writer (RFC-4180 style quoting, header row,
// embedded newlines inside quoted fields, CRLF tolerant).

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sentinel/common.hpp"

namespace sentinel::csv {

struct Dialect {
  char delimiter = ',';
  char quote = '"';
};

// Reads one record (possibly spanning several physical lines). Returns
// nullopt at end of input.
inline std::optional<std::vector<std::string>> read_record(std::istream& in,
                                                           const Dialect& d = {}) {
  int first = in.peek();
  if (first == EOF) return std::nullopt;

  std::vector<std::string> fields;
  std::string cur;
  bool in_quotes = false;
  bool saw_any = false;

  for (int ci = in.get(); ; ci = in.get()) {
    if (ci == EOF) {
      if (!saw_any && fields.empty() && cur.empty()) return std::nullopt;
      break;
    }
    char c = static_cast<char>(ci);
    saw_any = true;
    if (in_quotes) {
      if (c == d.quote) {
        if (in.peek() == d.quote) {
          cur.push_back(d.quote);
          in.get();
        } else {
          in_quotes = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == d.quote) {
      in_quotes = true;
    } else if (c == d.delimiter) {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c == '\n') {
      break;
    } else if (c == '\r') {
      if (in.peek() == '\n') in.get();
      break;
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

inline std::string quote_field(const std::string& field, const Dialect& d = {}) {
  bool needs = field.find(d.delimiter) != std::string::npos ||
               field.find(d.quote) != std::string::npos ||
               field.find('\n') != std::string::npos ||
               field.find('\r') != std::string::npos;
  if (!needs) return field;
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back(d.quote);
  for (char c : field) {
    if (c == d.quote) out.push_back(d.quote);
    out.push_back(c);
  }
  out.push_back(d.quote);
  return out;
}

inline void write_record(std::ostream& out, const std::vector<std::string>& fields,
                         const Dialect& d = {}) {
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out << d.delimiter;
    out << quote_field(fields[i], d);
  }
  out << '\n';
}

// Whole-table convenience view: header + rows, with name-based column lookup.
class Table {
public:
  static Table parse(std::istream& in, const Dialect& d = {}) {
    Table t;
    auto header = read_record(in, d);
    if (!header) return t;
    t.header_ = *header;
    while (auto rec = read_record(in, d)) {
      // skip blank trailing lines
      if (rec->size() == 1 && (*rec)[0].empty()) continue;
      t.rows_.push_back(std::move(*rec));
    }
    return t;
  }

  static Table parse_string(const std::string& text, const Dialect& d = {}) {
    std::istringstream ss(text);
    return parse(ss, d);
  }

  static Table parse_file(const std::string& path, const Dialect& d = {}) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw env_error("cannot read file: " + path);
    return parse(in, d);
  }

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::string>& row(size_t i) const { return rows_[i]; }
  size_t size() const { return rows_.size(); }

  // -1 when the column is absent.
  int column_index(const std::string& name) const {
    for (size_t i = 0; i < header_.size(); ++i)
      if (header_[i] == name) return static_cast<int>(i);
    return -1;
  }

  // Empty string for short rows: ragged tails read as missing values.
  std::string field(size_t row_idx, int col) const {
    if (col < 0) return {};
    const auto& r = rows_[row_idx];
    if (static_cast<size_t>(col) >= r.size()) return {};
    return r[static_cast<size_t>(col)];
  }

private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace sentinel::csv
