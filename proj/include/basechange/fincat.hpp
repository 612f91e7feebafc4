#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace basechange {

template <class T>
using Ptr = std::shared_ptr<const T>;

// Thrown for dangling ids, shape mismatches and guard overruns; law failures
// never throw, they land in a LawReport.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SizeGuardError : StructuralError {
  using StructuralError::StructuralError;
};

// Morphism bound for materialized categories. BASECHANGE_MAX_CELLS overrides.
std::size_t max_cells();
void check_size(std::size_t cells, const std::string& what);
// Candidate bound for exhaustive enumerations, 10^6 unless BASECHANGE_MAX_CELLS is set.
std::size_t max_candidates();

struct Violation {
  std::string law;
  std::string where;
  bool operator<(const Violation& o) const {
    return law != o.law ? law < o.law : where < o.where;
  }
  bool operator==(const Violation& o) const = default;
};

struct LawReport {
  std::vector<Violation> failures;
  std::vector<std::string> structural;

  bool ok() const { return failures.empty() && structural.empty(); }
  void fail(std::string law, std::string where) {
    failures.push_back({std::move(law), std::move(where)});
  }
  void broken(std::string what) { structural.push_back(std::move(what)); }
  void merge(const LawReport& o, const std::string& prefix = "");
  bool has(const std::string& law) const;
  std::string summary() const;
};

struct FinCat {
  std::string name;
  std::vector<std::string> obj;
  std::vector<std::string> mor;
  std::vector<int> dom, cod;
  std::vector<int> ident;
  std::vector<int> comp;  // comp[g * nm() + f] = g∘f, -1 off the composable pairs

  // filled by finalize()
  std::vector<std::vector<int>> homs;
  std::unordered_map<std::string, int> obj_ix, mor_ix;

  int no() const { return static_cast<int>(obj.size()); }
  int nm() const { return static_cast<int>(mor.size()); }
  int o(const std::string& id) const;
  int m(const std::string& id) const;
  int id(int x) const { return ident[x]; }
  const std::vector<int>& hom(int a, int b) const { return homs[a * no() + b]; }
  int compose(int g, int f) const;
  bool is_identity(int f) const { return ident[dom[f]] == f; }
  // two-sided inverse or -1
  int inverse(int f) const;
};

// Builds indices and hom lists; enforces the size guard.
void finalize(FinCat& c);

// Convenience builder. Composition is filled with set_comp.
class CatBuilder {
 public:
  explicit CatBuilder(std::string name) { c_.name = std::move(name); }
  int object(const std::string& id);
  int morphism(const std::string& id, int d, int cd);
  void identity(int x, int f) { c_.ident[x] = f; }
  void set_comp(int g, int f, int gf);
  FinCat& raw() { return c_; }
  FinCat build();

 private:
  FinCat c_;
  bool sized_ = false;
  void size_tables();
};

LawReport check_category(const FinCat& c);
bool same_cat(const FinCat& a, const FinCat& b);

// Object (i, j) sits at index i * b.no() + j, morphism (f, g) at f * b.nm() + g.
FinCat product_category(const FinCat& a, const FinCat& b);
FinCat terminal_category();

struct FinFunctor {
  Ptr<FinCat> src, dst;
  std::vector<int> omap, mmap;
};

FinFunctor identity_functor(Ptr<FinCat> c);
FinFunctor compose(const FinFunctor& g, const FinFunctor& f);  // g∘f
bool operator==(const FinFunctor& a, const FinFunctor& b);
LawReport check_functor(const FinFunctor& f);

struct FinNatTrans {
  FinFunctor src, dst;
  std::vector<int> comp;
};

LawReport check_nat(const FinNatTrans& t);

std::string pair_id(const std::string& a, const std::string& b);

}  // namespace basechange
