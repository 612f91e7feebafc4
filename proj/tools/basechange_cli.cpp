// basechange_cli: validate instance files, construct objects, run theorem suites.
// Exit status: 0 all pass, 1 some law failed, 2 parse or structural error.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "basechange/autoenrich.hpp"
#include "basechange/suites.hpp"

using namespace basechange;
using nlohmann::json;

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, ',');)
    if (!part.empty()) out.push_back(part);
  return out;
}

int emit(const std::vector<CheckResult>& results, const std::string& format, bool timing) {
  std::cout << (format == "json" ? report_json(results, timing) : report_text(results, timing));
  return exit_status(results);
}

// Validation of every declared entity, reported like a suite.
std::vector<CheckResult> validate(const Bundle& b) {
  std::vector<CheckResult> out;
  auto add = [&](std::string subject, LawReport rep) {
    CheckResult c;
    c.suite = "validate";
    c.subject = std::move(subject);
    c.report = std::move(rep);
    out.push_back(std::move(c));
  };
  auto guarded = [](auto f) {
    try {
      return f();
    } catch (const StructuralError& e) {
      LawReport r;
      r.broken(e.what());
      return r;
    }
  };
  for (const auto& c : b.categories) add("category/" + c->name, guarded([&] { return check_category(*c); }));
  for (const auto& v : b.bases) add("smcc/" + v->name, guarded([&] { return check_smcc(*v); }));
  for (const auto& k : b.functors) add("functor/" + k->name, guarded([&] { return check_monoidal_functor(*k); }));
  for (const auto& t : b.cells) add("nat/" + t->name, guarded([&] { return check_monoidal_nat(*t); }));
  for (const auto& a : b.vcats) add("vcat/" + a->name, guarded([&] { return check_vcat(*a); }));
  for (const auto& m : b.monvcats) add("monvcat/" + m->name, guarded([&] { return check_symmonclosed(*m); }));
  for (const auto& [name, idx] : b.indices)
    add("base_index/" + name, guarded([&] { return check_base_index(idx); }));
  for (const auto& a : b.adjunctions) add("adjunction/" + a.name, guarded([&] { return check_adjunction(a); }));
  return out;
}

json describe(const SymMonClosedVCat& m) {
  const VCat& a = *m.m;
  const FinCat& V = m.base().C();
  json hom = json::object();
  for (int A = 0; A < a.n(); ++A)
    for (int B = 0; B < a.n(); ++B) hom[pair_id(a.obj[A], a.obj[B])] = V.obj[a.h(A, B)];
  json ten = json::object();
  for (int A = 0; A < a.n(); ++A)
    for (int B = 0; B < a.n(); ++B) ten[pair_id(a.obj[A], a.obj[B])] = a.obj[m.ten(A, B)];
  return {{"name", m.name},   {"base", m.base().name}, {"objects", a.obj},
          {"hom", hom},       {"tensor", ten},         {"unit", a.obj[m.unit_obj]},
          {"valid", check_symmonclosed(m).ok()}};
}

json describe(const MonVFunctor& S) {
  json ob = json::object();
  for (int x = 0; x < S.src->n(); ++x) ob[S.src->m->obj[x]] = S.dst->m->obj[S.ob(x)];
  return {{"name", S.name}, {"src", describe(*S.src)}, {"dst", describe(*S.dst)}, {"objects", ob},
          {"valid", check_monvfunctor(S).ok()}};
}

json describe(const MonVNatTrans& t) {
  const FinCat& V = t.src->src->base().C();
  json comp = json::object();
  for (int x = 0; x < t.src->src->n(); ++x) comp[t.src->src->m->obj[x]] = V.mor[t.comp[x]];
  return {{"name", t.name}, {"components", comp}, {"valid", check_monvnat(t).ok()}};
}

int construct(const std::string& op, const std::string& file, const std::vector<std::string>& args) {
  Bundle b = load_bundle(file);
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw StructuralError("construct " + op + " expects " + std::to_string(n) + " argument(s)");
  };
  json out;
  if (op == "canonical") {
    need(0);
    std::cout << serialize_instance(parse_instance(read_text_file(file)));
    return 0;
  } else if (op == "autoenrich") {
    need(1);
    out = describe(*autoenrich(b.base(args[0])));
  } else if (op == "push") {
    need(2);
    out = describe(*push_monvcat(*b.functor(args[0]), *b.monvcat(args[1])));
  } else if (op == "grave") {
    need(1);
    out = describe(grave(b.functor(args[0])));
  } else if (op == "normalization") {
    need(1);
    out = describe(canonical_normalization(b.monvcat(args[0])));
  } else if (op == "enrich-adjunction") {
    need(1);
    const OrdinaryAdjunction* a = nullptr;
    for (const auto& x : b.adjunctions)
      if (x.name == args[0]) a = &x;
    if (!a) throw StructuralError("unknown adjunction id '" + args[0] + "'");
    EnrichedAdjunctionResult r = enrich_adjunction(*a);
    out = {{"left", describe(*r.adj.F)}, {"right", describe(*r.adj.G)}, {"unit", describe(*r.adj.eta)},
           {"counit", describe(*r.adj.eps)}, {"renaming", r.renaming_log}, {"report", r.report.summary()}};
    std::cout << out.dump(2) << "\n";
    return r.report.ok() ? 0 : (r.report.structural.empty() ? 1 : 2);
  } else {
    throw StructuralError("unknown construction '" + op +
                          "' (canonical, autoenrich, push, grave, normalization, enrich-adjunction)");
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite engine for change of base in enriched monoidal categories"};
  app.require_subcommand(1);
  std::string file, format = "text", suite, op;
  std::vector<std::string> args;
  bool timing = false;
  std::size_t max_cells_flag = 0;
  app.add_option("--max-cells", max_cells_flag, "size guard for materialized categories and enumerations");

  auto* val = app.add_subcommand("validate", "parse, resolve and validate an instance file");
  val->add_option("file", file)->required()->check(CLI::ExistingFile);
  val->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* con = app.add_subcommand("construct", "build one object and print it as JSON");
  con->add_option("op", op)->required();
  con->add_option("file", file)->required()->check(CLI::ExistingFile);
  con->add_option("args", args);

  auto* chk = app.add_subcommand("check", "run theorem suites (comma separated, or 'all')");
  chk->add_option("suite", suite)->required();
  chk->add_option("file", file)->required()->check(CLI::ExistingFile);
  chk->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  chk->add_flag("--timing", timing, "include per-check timings");

  auto* rep = app.add_subcommand("report", "run every suite and print the full report");
  rep->add_option("file", file)->required()->check(CLI::ExistingFile);
  rep->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  rep->add_flag("--timing", timing, "include per-check timings");

  auto* suites = app.add_subcommand("suites", "list the theorem suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (max_cells_flag > 0) setenv("BASECHANGE_MAX_CELLS", std::to_string(max_cells_flag).c_str(), 1);

  try {
    if (*suites) {
      for (const auto& s : suite_registry()) std::cout << s.id << "  " << s.operation << ": " << s.summary << "\n";
      return 0;
    }
    if (*val) return emit(validate(load_bundle(file)), format, false);
    if (*con) return construct(op, file, args);
    if (*chk) return emit(run_suite(load_bundle(file), split_commas(suite)), format, timing);
    if (*rep) return emit(run_suite(load_bundle(file), {"all"}), format, timing);
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
