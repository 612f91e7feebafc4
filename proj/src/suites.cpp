#include "basechange/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "basechange/autoenrich.hpp"
#include "basechange/parallel.hpp"

namespace basechange {

namespace {

struct Task {
  std::string suite, subject;
  std::function<LawReport()> run;
  std::vector<std::string>* log = nullptr;
};

void add_tasks(const Bundle& b, const std::string& suite, std::vector<Task>& out,
               std::vector<std::vector<std::string>>& logs) {
  auto add = [&](std::string subject, std::function<LawReport()> f) {
    out.push_back({suite, std::move(subject), std::move(f), nullptr});
  };
  if (suite == "smcc") {
    for (const auto& v : b.bases) add(v->name, [v] { return check_smcc(*v); });
  } else if (suite == "autoenrich") {
    for (const auto& v : b.bases) add("u" + v->name, [v] { return check_symmonclosed(*autoenrich(v)); });
  } else if (suite == "normalization") {
    for (const auto& G : normalization_targets(b)) add(G->name, [G] { return check_normalization_unique(G); });
  } else if (suite == "reconstruction") {
    for (const auto& m : b.monvcats) add(m->name, [m] { return reconstruct_iso(m).report; });
  } else if (suite == "theta-identity") {
    for (const auto& m : b.monvcats) add(m->name, [m] { return check_theta_normalization_identity(m); });
  } else if (suite == "fund-lemma") {
    for (const auto& G : enriched_one_cells(b)) {
      add(G->name + "/plain", [G] { return check_fundamental_lemma(G, false); });
      add(G->name + "/monoidal", [G] { return check_fundamental_lemma(G, true); });
    }
  } else if (suite == "recovery") {
    for (const auto& k : b.functors)
      if (k->symmetric) add(k->name, [k] { return check_recovery_triangle(k); });
  } else if (suite == "two-functor") {
    auto probe = autoenrich_probe(b);
    add("probe", [probe] { return check_autoenrichment_2functor(probe); });
  } else if (suite == "op2fibration") {
    for (const auto& [name, idx] : b.indices) {
      const BaseIndex* p = &idx;
      add(name, [p] { return check_split_op2fibration(*p); });
    }
  } else if (suite == "enr-v") {
    for (const auto& a : b.adjunctions) add(a.name, [a] { return check_enr_v(slice_probe(a)); });
  } else if (suite == "laxslice") {
    for (const auto& a : b.adjunctions) add(a.name, [a] { return check_laxslice_to_fibre(slice_probe(a)); });
  } else if (suite == "adjunction") {
    for (const auto& a : b.adjunctions)
      add(a.name, [a] {
        LawReport rep = check_adjunction(a);
        if (rep.ok() && !is_normal(a.G)) rep.fail("right-adjoint-normal", a.G->name);
        return rep;
      });
  } else if (suite == "laxslice-adjunction") {
    for (const auto& a : b.adjunctions) add(a.name, [a] { return check_adjunction(laxslice_adjunction(a)); });
  } else if (suite == "enriched-adjunction") {
    for (const auto& a : b.adjunctions) {
      logs.emplace_back();
      out.push_back({suite, a.name, nullptr, nullptr});
      out.back().log = &logs.back();
      std::vector<std::string>* log = out.back().log;
      out.back().run = [a, log] {
        EnrichedAdjunctionResult r = enrich_adjunction(a);
        *log = r.renaming_log;
        return r.report;
      };
    }
  }
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> r = {
      {"smcc", "check_smcc", "coherence and closedness of every base"},
      {"autoenrich", "check_symmonclosed(autoenrich)", "each base enriched in itself is symmetric monoidal closed"},
      {"normalization", "enumerate_monoidal_vnats", "exactly one monoidal V-natural U^M => G"},
      {"reconstruction", "reconstruct_iso", "M is isomorphic to U^M_* uM, identity on objects and strict"},
      {"theta-identity", "check_theta_normalization_identity", "theta of U^M is an identity on names"},
      {"fund-lemma", "check_fundamental_lemma", "the fundamental square of V-functors commutes"},
      {"recovery", "check_recovery_triangle", "the underlying functor of G-grave after K^G is G"},
      {"two-functor", "check_autoenrichment_2functor", "autoenrichment preserves identities, composites and 2-cells"},
      {"op2fibration", "check_split_op2fibration", "designated lifts solve their problems uniquely and split"},
      {"enr-v", "check_enr_v", "Enr_V agrees with the route through the lax slice of the total 2-category"},
      {"laxslice", "check_laxslice_to_fibre", "the lax slice functor is 2-functorial and agrees with the solver"},
      {"adjunction", "check_adjunction", "triangle identities; the right adjoint is normal"},
      {"laxslice-adjunction", "laxslice_adjunction", "the slice adjunction over the base"},
      {"enriched-adjunction", "enrich_adjunction", "the enriched adjunction and its identification with the input"},
  };
  return r;
}

std::vector<CheckResult> run_suite(const Bundle& b, const std::vector<std::string>& suites) {
  std::set<std::string> seen;
  for (const auto& s : suites) {
    if (s == "all") {
      for (const auto& info : suite_registry()) seen.insert(info.id);
      continue;
    }
    bool known = false;
    for (const auto& info : suite_registry()) known = known || info.id == s;
    if (!known) throw StructuralError("unknown suite '" + s + "'");
    seen.insert(s);
  }
  // canonical order regardless of request order
  std::vector<std::string> ordered;
  for (const auto& info : suite_registry())
    if (seen.count(info.id)) ordered.push_back(info.id);

  std::vector<Task> tasks;
  std::vector<std::vector<std::string>> logs;
  logs.reserve(b.adjunctions.size() + 1);
  for (const auto& s : ordered) add_tasks(b, s, tasks, logs);

  std::vector<double> millis(tasks.size(), 0);
  std::vector<std::string> guarded(tasks.size());  // a size-guard refusal skips the check
  std::vector<std::function<LawReport()>> fns;
  for (std::size_t i = 0; i < tasks.size(); ++i)
    fns.push_back([&, i] {
      auto t0 = std::chrono::steady_clock::now();
      LawReport rep;
      try {
        rep = tasks[i].run();
      } catch (const SizeGuardError& e) {
        guarded[i] = e.what();
      } catch (const StructuralError& e) {
        rep.broken(e.what());
      } catch (const std::exception& e) {
        rep.broken(std::string("internal error: ") + e.what());
      }
      millis[i] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      return rep;
    });
  std::vector<LawReport> reps = run_parallel(fns);

  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    CheckResult c;
    c.suite = tasks[i].suite;
    c.subject = tasks[i].subject;
    c.report = reps[i];
    c.millis = millis[i];
    c.skipped = !guarded[i].empty();
    if (c.skipped) c.note = guarded[i];
    if (tasks[i].log)
      for (const auto& l : *tasks[i].log) c.note += (c.note.empty() ? "" : "\n") + l;
    out.push_back(std::move(c));
  }
  return out;
}

std::string report_json(const std::vector<CheckResult>& results, bool with_timing) {
  using nlohmann::json;
  json rs = json::array();
  int pass = 0, fail = 0, skipped = 0;
  for (const auto& c : results) {
    json r;
    r["id"] = c.id();
    r["suite"] = c.suite;
    r["subject"] = c.subject;
    r["status"] = c.status();
    json v = json::array();
    std::vector<Violation> sorted = c.report.failures;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& f : sorted) v.push_back({{"law", f.law}, {"where", f.where}});
    r["violations"] = v;
    r["structural"] = c.report.structural;
    if (!c.note.empty()) {
      json log = json::array();
      std::istringstream in(c.note);
      for (std::string line; std::getline(in, line);) log.push_back(line);
      r["log"] = log;
    }
    if (with_timing) r["millis"] = c.millis;
    rs.push_back(r);
    (c.skipped ? skipped : c.report.ok() ? pass : fail)++;
  }
  json doc;
  doc["schema"] = "basechange-report";
  doc["version"] = 1;
  doc["results"] = rs;
  doc["totals"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}};
  doc["exit_status"] = exit_status(results);
  return doc.dump(2) + "\n";
}

std::string report_text(const std::vector<CheckResult>& results, bool with_timing) {
  std::ostringstream out;
  int pass = 0, fail = 0, skipped = 0;
  for (const auto& c : results) {
    out << (c.skipped ? "SKIP " : c.report.ok() ? "PASS " : "FAIL ") << c.id();
    if (with_timing) out << " (" << static_cast<long long>(c.millis) << " ms)";
    out << "\n";
    std::vector<Violation> sorted = c.report.failures;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& f : sorted) out << "  " << f.law << " at " << f.where << "\n";
    for (const auto& s : c.report.structural) out << "  structural: " << s << "\n";
    if (c.skipped) out << "  " << c.note << "\n";
    (c.skipped ? skipped : c.report.ok() ? pass : fail)++;
  }
  out << pass << " passed, " << fail << " failed";
  if (skipped) out << ", " << skipped << " skipped";
  out << "\n";
  return out.str();
}

int exit_status(const std::vector<CheckResult>& results) {
  int code = 0;
  for (const auto& c : results) {
    if (!c.report.structural.empty()) return 2;
    if (!c.report.failures.empty()) code = 1;
  }
  return code;
}

}  // namespace basechange
