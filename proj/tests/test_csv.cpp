#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "sentinel/csv.hpp"

using sentinel::csv::Table;

TEST_CASE("csv parses quoted fields, embedded separators and newlines", "[csv]") {
  std::string text =
      "id,text,label\n"
      "1,\"hello, world\",0\n"
      "2,\"line one\nline two\",1\n"
      "3,\"he said \"\"no\"\"\",0\n";
  Table t = Table::parse_string(text);
  REQUIRE(t.size() == 3);
  CHECK(t.header() == std::vector<std::string>{"id", "text", "label"});
  CHECK(t.row(0)[1] == "hello, world");
  CHECK(t.row(1)[1] == "line one\nline two");
  CHECK(t.row(2)[1] == "he said \"no\"");
}

TEST_CASE("csv tolerates CRLF line endings and a missing trailing newline", "[csv]") {
  Table t = Table::parse_string("a,b\r\n1,2\r\n3,4");
  REQUIRE(t.size() == 2);
  CHECK(t.row(0) == std::vector<std::string>{"1", "2"});
  CHECK(t.row(1) == std::vector<std::string>{"3", "4"});
}

TEST_CASE("csv field access is tolerant of ragged rows", "[csv]") {
  Table t = Table::parse_string("a,b,c\n1,2\n");
  REQUIRE(t.size() == 1);
  CHECK(t.field(0, t.column_index("a")) == "1");
  CHECK(t.field(0, t.column_index("c")) == "");  // short row reads as empty
  CHECK(t.column_index("nope") == -1);
  CHECK(t.field(0, -1) == "");
}

TEST_CASE("csv writer round-trips awkward content", "[csv]") {
  std::vector<std::vector<std::string>> rows = {
      {"plain", "with,comma", "with\"quote"},
      {"multi\nline", "", "trailing space "},
      {"\xE2\x82\xAC unicode", "\"", ",\n\","},
  };
  std::ostringstream out;
  out << "h1,h2,h3\n";
  for (const auto& r : rows) sentinel::csv::write_record(out, r);
  Table t = Table::parse_string(out.str());
  REQUIRE(t.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i) CHECK(t.row(i) == rows[i]);
}

TEST_CASE("csv keeps empty fields and empty last columns", "[csv]") {
  Table t = Table::parse_string("a,b\n,\nx,\n");
  REQUIRE(t.size() == 2);
  CHECK(t.row(0) == std::vector<std::string>{"", ""});
  CHECK(t.row(1) == std::vector<std::string>{"x", ""});
}
