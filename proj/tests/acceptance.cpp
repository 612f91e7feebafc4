// Acceptance run: one line per criterion, exit status 1 if any fails.
// Criteria 1 to 9 read the full suite report over the bundled instances;
// criterion 10 corrupts one entry per area and requires a named violation;
// criterion 11 repeats the full run and compares the JSON byte for byte.

#include <functional>
#include <iostream>
#include <map>
#include <set>

#include "basechange/suites.hpp"

using namespace basechange;

namespace {

template <class T>
Ptr<T> share(T x) {
  return std::make_shared<const T>(std::move(x));
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail.push_back(what);
    }
  }
};

// Every check of the listed suites ran and passed; at least one ran.
Outcome suites_pass(const std::vector<CheckResult>& all, const std::set<std::string>& suites) {
  Outcome o;
  int ran = 0;
  for (const auto& c : all) {
    if (!suites.count(c.suite)) continue;
    ++ran;
    if (c.skipped) o.require(false, c.id() + " skipped");
    for (const auto& f : c.report.failures) o.require(false, c.id() + ": " + f.law + " at " + f.where);
    for (const auto& s : c.report.structural) o.require(false, c.id() + ": " + s);
  }
  o.require(ran > 0, "no checks ran");
  return o;
}

const OrdinaryAdjunction& adjunction(const Bundle& b, const std::string& id) {
  for (const auto& a : b.adjunctions)
    if (a.name == id) return a;
  throw StructuralError("bundle has no adjunction " + id);
}

// A mutation is detected when the report names at least one violated law
// instance; a structural error alone does not count.
struct Mutation {
  int criterion;
  std::string what;
  std::function<LawReport()> run;
};

std::vector<Mutation> mutations(const Bundle& b) {
  std::vector<Mutation> out;
  out.push_back({1, "B2 with [1,0] set to 1", [&b] {
                   Smcc v = *b.base("B2");
                   v.ihom[1 * 2 + 0] = 1;
                   return check_smcc(v);
                 }});
  out.push_back({2, "uG3 with [1/2,0] set to 1/2 in the closure of 1/2", [&b] {
                   SymMonClosedVCat m = *b.monvcat("uG3");
                   m.closure[1].rmap[0] = 1;
                   return check_symmonclosed(m);
                 }});
  out.push_back({3, "U^uC3 with unit cell g1", [&b] {
                   MonVFunctor G = canonical_normalization(b.monvcat("uC3"));
                   G.e = b.base("C3")->C().m("g1");
                   return check_normalization_unique(share(G));
                 }});
  out.push_back({4, "uC3 with symmetry name g1", [&b] {
                   SymMonClosedVCat m = *b.monvcat("uC3");
                   m.s[0] = b.base("C3")->C().m("g1");
                   return reconstruct_iso(share(m)).report;
                 }});
  out.push_back({5, "grave(inv3) with hom map g1", [&b] {
                   MonVFunctor G = grave(b.functor("inv3"));
                   G.F.hmap[0] = b.base("C3")->C().m("g1");
                   return check_fundamental_lemma(share(G), true);
                 }});
  out.push_back({6, "iota_ceil with component at 1/2 the identity", [&b] {
                   MonoidalNatTrans a = *b.cell("iota_ceil");
                   a.comp[1] = b.base("L3")->id(1);
                   AutoenrichProbe p{{b.functor("iota"), b.functor("ceil")}, {share(a)}};
                   return check_autoenrichment_2functor(p);
                 }});
  out.push_back({7, "cleavage with psi(iota, (G3,uG3)) replaced by the image of iota", [&b] {
                   Cleavage bad;
                   auto g3 = b.base("G3");
                   auto ug3 = b.monvcat("uG3");
                   bad.psi = [g3, ug3](Ptr<MonoidalFunctor> k, const GrothObj& A) {
                     if (k->name == "iota" && same_smcc(*A.base, *g3) && same_symmonclosed(*A.fibre, *ug3))
                       return grave_cell(k);
                     return designated_cocartesian(k, A);
                   };
                   return check_split_op2fibration(b.indices.at(0).second, bad);
                 }});
  out.push_back({8, "slice 1-cell (F, eta) of r_q with sigma at 0 replaced", [&b] {
                   SliceProbe p = slice_probe(adjunction(b, "r_q"));
                   for (auto& s : p.one_cells)
                     if (s.sigma->name == "eta") {
                       MonoidalNatTrans t = *s.sigma;
                       t.comp[0] = b.base("B2")->C().m("0<=1");
                       s.sigma = share(t);
                     }
                   return check_enr_v(p);
                 }});
  out.push_back({9, "r_q with eps at 1/2 replaced by the identity of 0", [&b] {
                   OrdinaryAdjunction a = adjunction(b, "r_q");
                   MonoidalNatTrans e = *a.eps;
                   e.comp[1] = b.base("G3")->id(0);
                   a.eps = share(e);
                   return check_adjunction(a);
                 }});
  return out;
}

}  // namespace

int main() {
  const Bundle& b = bundled();
  std::vector<CheckResult> first = run_suite(b, {"all"});

  std::vector<std::pair<std::string, Outcome>> crit;
  crit.push_back({"structure validity of every base", suites_pass(first, {"smcc"})});
  crit.push_back({"autoenrichments are symmetric monoidal closed", suites_pass(first, {"autoenrich"})});
  crit.push_back({"normalization transformations are unique", suites_pass(first, {"normalization"})});
  crit.push_back({"reconstruction is strict, invertible, with theta the identity",
                  suites_pass(first, {"reconstruction", "theta-identity"})});
  crit.push_back({"fundamental lemma, plain and monoidal, and recovery",
                  suites_pass(first, {"fund-lemma", "recovery"})});
  crit.push_back({"autoenrichment is a 2-functor on the probe", suites_pass(first, {"two-functor"})});

  Outcome c7 = suites_pass(first, {"op2fibration"});
  std::vector<Mutation> muts = mutations(b);
  // the corrupted cleavage is part of criterion 7 itself
  {
    LawReport r = muts[6].run();
    c7.require(!r.failures.empty(), "corrupted cleavage went undetected");
  }
  crit.push_back({"split op-2-fibration with a detected corrupted cleavage", c7});
  crit.push_back({"Enr_V agrees with the lax slice route", suites_pass(first, {"enr-v", "laxslice"})});

  Outcome c9 = suites_pass(first, {"adjunction", "laxslice-adjunction", "enriched-adjunction"});
  try {
    EnrichedAdjunctionResult r = enrich_adjunction(adjunction(b, "r_q"));
    const OrdinaryAdjunction& a = adjunction(b, "r_q");
    c9.require(r.report.ok(), "enriched adjunction report: " + r.report.summary());
    c9.require(is_isomorphism(r.K.K), "K^q is not invertible");
    c9.require(*r.identified.F == *a.F && *r.identified.G == *a.G, "identified functors differ from r, q");
    c9.require(r.identified.eta->comp == a.eta->comp && r.identified.eps->comp == a.eps->comp,
               "identified unit or counit differs");
    std::vector<int> names;
    for (int v : a.eta->comp) names.push_back(a.F->src->name_of(v));
    c9.require(r.adj.eta->comp == names, "enriched unit components are not the names of eta");
  } catch (const StructuralError& e) {
    c9.require(false, e.what());
  }
  crit.push_back({"enriched adjunction for r -| q identified with the input", c9});

  Outcome c10;
  for (const auto& m : muts) {
    LawReport r;
    try {
      r = m.run();
    } catch (const StructuralError& e) {
      r.broken(e.what());
    }
    if (r.failures.empty()) {
      c10.require(false, "criterion " + std::to_string(m.criterion) + ": " + m.what + " not detected" +
                             (r.structural.empty() ? "" : " (structural only: " + r.structural[0] + ")"));
    } else {
      std::vector<Violation> v = r.failures;
      std::sort(v.begin(), v.end());
      c10.detail.push_back("criterion " + std::to_string(m.criterion) + ": " + m.what + " -> " + v[0].law +
                           " at " + v[0].where);
    }
  }
  crit.push_back({"every area detects a single-entry corruption", c10});

  Outcome c11;
  std::vector<CheckResult> second = run_suite(b, {"all"});
  c11.require(report_json(first) == report_json(second), "JSON reports differ between runs");
  crit.push_back({"two full runs give byte-identical JSON", c11});

  bool all = true;
  for (std::size_t i = 0; i < crit.size(); ++i) {
    const auto& [desc, o] = crit[i];
    all = all && o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS " : "FAIL ") << desc << "\n";
    for (const auto& d : o.detail) std::cout << "  " << d << "\n";
  }
  return all ? 0 : 1;
}
