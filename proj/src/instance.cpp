#include "basechange/instance.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace basechange {

namespace {

const std::set<std::string> body_kinds = {"quantale", "monoid",     "category",  "functor",
                                          "nat",      "vcat",       "base_index", "adjunction"};
const std::set<std::string> line_kinds = {"smcc", "compose", "identity", "vcomp", "monvcat"};

struct Token {
  std::string text;
  int col;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::vector<std::string> texts(const std::vector<Token>& ts, std::size_t from = 0) {
  std::vector<std::string> out;
  for (std::size_t i = from; i < ts.size(); ++i) out.push_back(ts[i].text);
  return out;
}

}  // namespace

bool has_body(const std::string& kind) { return body_kinds.count(kind) > 0; }

InstanceFile parse_instance(std::string_view text) {
  InstanceFile f;
  std::istringstream in{std::string(text)};
  std::string line;
  int ln = 0;
  Record* open = nullptr;
  std::set<std::pair<std::string, std::string>> ids;  // (kind, id)
  while (std::getline(in, line)) {
    ++ln;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const bool indented = first > 0;
    if (line[first] == '#') {
      if (!open && !indented) {
        std::string body = line.substr(first + 1);
        while (!body.empty() && (body.back() == ' ' || body.back() == '\r' || body.back() == '\t'))
          body.pop_back();
        if (!body.empty() && body.front() == ' ') body.erase(0, 1);
        f.records.push_back({"#", {body}, {}, ln, {}});
      }
      continue;
    }
    std::vector<Token> ts = tokenize(line);
    if (ts.empty()) continue;
    if (open) {
      if (!indented && ts[0].text == "end") {
        if (ts.size() > 1) throw ParseError(ln, ts[1].col, "unexpected text after 'end'");
        open = nullptr;
        continue;
      }
      if (!indented)
        throw ParseError(ln, ts[0].col, "'" + open->kind + " " + open->head[0] + "' opened on line " +
                                            std::to_string(open->line) + " is missing 'end'");
      open->body.push_back(texts(ts));
      open->body_lines.push_back(ln);
      continue;
    }
    if (indented) throw ParseError(ln, ts[0].col, "indented line outside any section");
    const std::string& kind = ts[0].text;
    if (kind == "end") throw ParseError(ln, ts[0].col, "'end' without an open section");
    if (!body_kinds.count(kind) && !line_kinds.count(kind))
      throw ParseError(ln, ts[0].col, "unknown section kind '" + kind + "'");
    if (ts.size() < 2) throw ParseError(ln, static_cast<int>(line.size()) + 1, "missing id after '" + kind + "'");
    if (!ids.insert({kind, ts[1].text}).second)
      throw ParseError(ln, ts[1].col, "duplicate " + kind + " id '" + ts[1].text + "'");
    f.records.push_back({kind, texts(ts, 1), {}, ln, {}});
    if (body_kinds.count(kind)) open = &f.records.back();
  }
  if (open)
    throw ParseError(ln + 1, 1, "end of input inside '" + open->kind + " " + open->head[0] + "' from line " +
                                    std::to_string(open->line));
  return f;
}

std::string serialize_instance(const InstanceFile& f) {
  std::string out;
  auto join = [](const std::vector<std::string>& ws) {
    std::string s;
    for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? " " : "") + ws[i];
    return s;
  };
  for (std::size_t r = 0; r < f.records.size(); ++r) {
    const Record& rec = f.records[r];
    // consecutive comments form one block
    if (r > 0 && !(rec.kind == "#" && f.records[r - 1].kind == "#")) out += "\n";
    if (rec.kind == "#") {
      out += rec.head[0].empty() ? "#\n" : "# " + rec.head[0] + "\n";
      continue;
    }
    out += rec.kind + " " + join(rec.head) + "\n";
    if (!has_body(rec.kind)) continue;
    for (const auto& b : rec.body) out += "  " + join(b) + "\n";
    out += "end\n";
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace basechange
