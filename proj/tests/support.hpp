#pragma once

// Shared fixtures and brute-force oracles. The oracles work directly on the
// quantale and monoid descriptions and never call into the engine's
// constructions, so agreement with the engine is evidence, not tautology.

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "basechange/suites.hpp"

namespace fx {

using namespace basechange;

inline Ptr<Smcc> smcc_of(const std::string& id) { return bundled().base(id); }
inline Ptr<Smcc> B2() { return smcc_of("B2"); }
inline Ptr<Smcc> G3() { return smcc_of("G3"); }
inline Ptr<Smcc> L3() { return smcc_of("L3"); }
inline Ptr<Smcc> C2() { return smcc_of("C2"); }
inline Ptr<Smcc> C3() { return smcc_of("C3"); }
inline Ptr<Smcc> T1() { return smcc_of("T1"); }
inline Ptr<MonoidalFunctor> fn(const std::string& id) { return bundled().functor(id); }
inline Ptr<MonoidalNatTrans> cell(const std::string& id) { return bundled().cell(id); }
inline Ptr<SymMonClosedVCat> u(Ptr<Smcc> v) { return autoenrich(v); }

inline const OrdinaryAdjunction& adjunction(const std::string& id) {
  for (const auto& a : bundled().adjunctions)
    if (a.name == id) return a;
  throw StructuralError("no bundled adjunction " + id);
}

template <class T>
Ptr<T> share(T x) {
  return std::make_shared<const T>(std::move(x));
}

inline bool has_at(const LawReport& r, const std::string& law, const std::string& where) {
  return std::find(r.failures.begin(), r.failures.end(), Violation{law, where}) != r.failures.end();
}

inline bool has_law_prefix(const LawReport& r, const std::string& prefix) {
  for (const auto& f : r.failures)
    if (f.law.rfind(prefix, 0) == 0) return true;
  return false;
}

// Quantale arithmetic from the raw description.
struct QOracle {
  QuantaleDesc d;
  std::vector<std::vector<bool>> le;

  explicit QOracle(QuantaleDesc q) : d(std::move(q)) {
    const int n = size();
    le.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) le[i][i] = true;
    for (const auto& [a, b] : d.leq) le[ix(a)][ix(b)] = true;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (le[i][k] && le[k][j]) le[i][j] = true;
  }
  int size() const { return static_cast<int>(d.carrier.size()); }
  int ix(const std::string& s) const {
    return static_cast<int>(std::find(d.carrier.begin(), d.carrier.end(), s) - d.carrier.begin());
  }
  int mul(int a, int b) const { return ix(d.mult.at({d.carrier[a], d.carrier[b]})); }
  int unit() const { return ix(d.unit); }
  // join of {s : a⊗s ≤ b}; the carriers used here are chains, so the join is
  // the greatest such s
  int res(int a, int b) const {
    int best = -1;
    for (int s = 0; s < size(); ++s)
      if (le[mul(a, s)][b] && (best < 0 || le[best][s])) best = s;
    return best;
  }
};

}  // namespace fx
