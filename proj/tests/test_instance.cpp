#include <doctest.h>

#include "support.hpp"

using namespace basechange;

namespace {

const std::string src_dir = BASECHANGE_SOURCE_DIR;

std::string error_of(const std::string& text) {
  try {
    build_bundle(parse_instance(text));
  } catch (const StructuralError& e) {
    return e.what();
  }
  return "";
}

ParseError parse_error_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e;
  }
  return ParseError(0, 0, "no error");
}

}  // namespace

TEST_CASE("b2.inst has one quantale") {
  InstanceFile f = parse_instance(read_text_file(src_dir + "/instances/b2.inst"));
  int quantales = 0;
  for (const auto& r : f.records) quantales += r.kind == "quantale";
  CHECK(quantales == 1);
  Bundle b = load_bundle(src_dir + "/instances/b2.inst");
  CHECK(b.bases.empty());  // a quantale alone declares no base
}

TEST_CASE("canonical form is a fixed point for the shipped files") {
  for (const char* name : {"/instances/b2.inst", "/instances/bundle.inst"}) {
    INFO(name);
    std::string text = read_text_file(src_dir + name);
    CHECK(serialize_instance(parse_instance(text)) == text);
  }
}

TEST_CASE("compiled-in bundle equals the file") {
  CHECK(bundled_text() == read_text_file(src_dir + "/instances/bundle.inst"));
}

TEST_CASE("bundle contents") {
  const Bundle& b = bundled();
  CHECK(b.bases.size() == 6);
  CHECK(b.monvcats.size() == 11);
  CHECK(b.adjunctions.size() == 2);
  REQUIRE(b.indices.size() == 1);
  CHECK(b.indices[0].second.functors.size() == 12);
  CHECK(b.indices[0].second.cells.size() == 20);
  CHECK(b.functor("rq")->F.omap == std::vector<int>{0, 0, 2});
}

TEST_CASE("category sections") {
  REQUIRE(fx::bundled().categories.size() == 1);
  const FinCat& e = *fx::bundled().categories[0];
  CHECK(check_category(e).ok());
  CHECK(e.compose(e.m("s"), e.m("s")) == e.m("s"));
  CHECK(e.compose(e.m("s"), e.m("1")) == e.m("s"));  // defaulted identity composite

  const std::string head = "category A\n  objects a b\n  identity a 1a\n  identity b 1b\n  mor f a b\n";
  Bundle ok = build_bundle(parse_instance(head + "end\n"));
  CHECK(check_category(*ok.categories[0]).ok());
  // an explicit line overrides the default and is then caught by the identity law
  Bundle bad = build_bundle(parse_instance(head + "  comp f 1a 1a\nend\n"));
  LawReport r = check_category(*bad.categories[0]);
  CHECK_FALSE(r.ok());
  CHECK(error_of(head + "  comp f g f\nend\n").find("'g'") != std::string::npos);
  CHECK(error_of("category A\n  objects a\nend\n").find("no identity") != std::string::npos);
}

TEST_CASE("canonicalization normalizes layout and keeps comments") {
  std::string messy =
      "# header\n#   second line\n\n\nquantale   B2   # trailing\n"
      "    carrier 0   1\n\tleq 0 1\n  mult 0 0 0\n  mult 0 1 0\n  mult 1 0 0\n  mult 1 1 1\n  unit 1\nend\n"
      "smcc B2 quantale B2\n";
  std::string canon = serialize_instance(parse_instance(messy));
  CHECK(canon ==
        "# header\n#   second line\n\nquantale B2\n  carrier 0 1\n  leq 0 1\n  mult 0 0 0\n  mult 0 1 0\n"
        "  mult 1 0 0\n  mult 1 1 1\n  unit 1\nend\n\nsmcc B2 quantale B2\n");
  CHECK(serialize_instance(parse_instance(canon)) == canon);
  Bundle b = build_bundle(parse_instance(messy));
  CHECK(check_smcc(*b.base("B2")).ok());
}

TEST_CASE("parse errors carry line and column") {
  ParseError e1 = parse_error_of("quantale X\n  carrier 0\nsmcc X quantale X\n");
  CHECK(e1.line == 3);
  CHECK(e1.col == 1);
  ParseError e2 = parse_error_of("widget W\n");
  CHECK(e2.line == 1);
  CHECK(std::string(e2.what()).find("unknown section kind 'widget'") != std::string::npos);
  ParseError e3 = parse_error_of("smcc A quantale B\nsmcc A quantale C\n");
  CHECK(e3.line == 2);
  CHECK(e3.col == 6);
  ParseError e4 = parse_error_of("  carrier 0\n");
  CHECK(e4.line == 1);
  CHECK(e4.col == 3);
  ParseError e5 = parse_error_of("quantale Q\n  unit 1\n");
  CHECK(e5.line == 3);
}

TEST_CASE("unresolved ids are named") {
  std::string err = error_of("smcc B2 quantale Nope\n");
  CHECK(err.find("Nope") != std::string::npos);
  CHECK(err.find("line 1") != std::string::npos);
  std::string text = read_text_file(src_dir + "/instances/b2.inst") + "\nsmcc B2 quantale B2\n\nfunctor f B2 Missing\n  ob 0 0\nend\n";
  err = error_of(text);
  CHECK(err.find("Missing") != std::string::npos);
}

TEST_CASE("shape errors are structural") {
  std::string text = bundled_text() + "\nnat bad r q\nend\n";
  std::string err = error_of(text);
  CHECK_FALSE(err.empty());
}

TEST_CASE("size-guard refusals are reported as skipped") {
  const Bundle& b = fx::bundled();
  setenv("BASECHANGE_MAX_CELLS", "10", 1);
  std::vector<CheckResult> rs = run_suite(b, {"autoenrich"});
  unsetenv("BASECHANGE_MAX_CELLS");
  int skipped = 0;
  for (const auto& c : rs) {
    skipped += c.skipped;
    if (c.skipped) CHECK(c.note.find("size guard") != std::string::npos);
  }
  CHECK(skipped > 0);
  CHECK(exit_status(rs) == 0);
  CHECK(report_json(rs).find("\"skipped\"") != std::string::npos);
}
