#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "basechange/fincat.hpp"

namespace basechange {

// Line-oriented instance text. A record is a header line `kind id args...`;
// kinds with a body take indented lines up to `end`. Top-level `#` lines are
// kept as comment records, every other comment is dropped.
struct ParseError : StructuralError {
  int line, col;
  ParseError(int l, int c, const std::string& msg)
      : StructuralError("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg),
        line(l),
        col(c) {}
};

struct Record {
  std::string kind;               // "#" for comments
  std::vector<std::string> head;  // head[0] is the id; the comment text for "#"
  std::vector<std::vector<std::string>> body;
  int line = 0;
  std::vector<int> body_lines;
};

struct InstanceFile {
  std::vector<Record> records;
};

bool has_body(const std::string& kind);
InstanceFile parse_instance(std::string_view text);
// Canonical form: single spaces, two-space body indent, one blank line
// between records. parse_instance(serialize_instance(f)) reproduces f.
std::string serialize_instance(const InstanceFile& f);
std::string read_text_file(const std::string& path);

}  // namespace basechange
