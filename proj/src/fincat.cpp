#include "basechange/fincat.hpp"

#include <algorithm>
#include <cstdlib>

namespace basechange {

namespace {
std::size_t env_bound(std::size_t fallback) {
  if (const char* env = std::getenv("BASECHANGE_MAX_CELLS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}
}  // namespace

std::size_t max_cells() { return env_bound(20000); }
std::size_t max_candidates() { return env_bound(1000000); }

void check_size(std::size_t cells, const std::string& what) {
  if (cells > max_cells())
    throw SizeGuardError("size guard: " + what + " needs " + std::to_string(cells) +
                         " cells, bound is " + std::to_string(max_cells()));
}

void LawReport::merge(const LawReport& o, const std::string& prefix) {
  for (const auto& v : o.failures) failures.push_back({prefix + v.law, v.where});
  for (const auto& s : o.structural) structural.push_back(prefix + s);
}

bool LawReport::has(const std::string& law) const {
  for (const auto& v : failures)
    if (v.law == law || v.law.find(law) != std::string::npos) return true;
  return false;
}

std::string LawReport::summary() const {
  if (ok()) return "ok";
  std::string s;
  if (!structural.empty()) s += "structural: " + structural.front();
  if (!failures.empty()) {
    if (!s.empty()) s += "; ";
    s += failures.front().law + " at " + failures.front().where;
    if (failures.size() > 1) s += " (+" + std::to_string(failures.size() - 1) + " more)";
  }
  return s;
}

int FinCat::o(const std::string& id) const {
  auto it = obj_ix.find(id);
  if (it == obj_ix.end()) throw StructuralError("unknown object '" + id + "' in " + name);
  return it->second;
}

int FinCat::m(const std::string& id) const {
  auto it = mor_ix.find(id);
  if (it == mor_ix.end()) throw StructuralError("unknown morphism '" + id + "' in " + name);
  return it->second;
}

int FinCat::compose(int g, int f) const {
  if (f < 0 || g < 0 || f >= nm() || g >= nm())
    throw StructuralError("compose: morphism index out of range in " + name);
  int r = cod[f] == dom[g] ? comp[static_cast<std::size_t>(g) * nm() + f] : -1;
  if (r < 0)
    throw StructuralError("compose: " + mor[g] + " after " + mor[f] + " is not composable in " +
                          name);
  return r;
}

int FinCat::inverse(int f) const {
  for (int g : hom(cod[f], dom[f]))
    if (compose(g, f) == ident[dom[f]] && compose(f, g) == ident[cod[f]]) return g;
  return -1;
}

void finalize(FinCat& c) {
  check_size(c.mor.size(), "category " + c.name);
  c.obj_ix.clear();
  c.mor_ix.clear();
  for (int i = 0; i < c.no(); ++i)
    if (!c.obj_ix.emplace(c.obj[i], i).second)
      throw StructuralError("duplicate object id '" + c.obj[i] + "' in " + c.name);
  for (int i = 0; i < c.nm(); ++i)
    if (!c.mor_ix.emplace(c.mor[i], i).second)
      throw StructuralError("duplicate morphism id '" + c.mor[i] + "' in " + c.name);
  c.homs.assign(static_cast<std::size_t>(c.no()) * c.no(), {});
  for (int f = 0; f < c.nm(); ++f) {
    if (c.dom[f] < 0 || c.dom[f] >= c.no() || c.cod[f] < 0 || c.cod[f] >= c.no())
      throw StructuralError("morphism '" + c.mor[f] + "' has a dangling endpoint in " + c.name);
    c.homs[c.dom[f] * c.no() + c.cod[f]].push_back(f);
  }
}

void CatBuilder::size_tables() {
  if (sized_) return;
  auto n = static_cast<std::size_t>(c_.nm());
  c_.comp.assign(n * n, -1);
  sized_ = true;
}

int CatBuilder::object(const std::string& id) {
  c_.obj.push_back(id);
  c_.ident.push_back(-1);
  return c_.no() - 1;
}

int CatBuilder::morphism(const std::string& id, int d, int cd) {
  if (sized_) throw std::logic_error("CatBuilder: morphism added after composition");
  c_.mor.push_back(id);
  c_.dom.push_back(d);
  c_.cod.push_back(cd);
  return c_.nm() - 1;
}

void CatBuilder::set_comp(int g, int f, int gf) {
  if (!sized_) {
    check_size(c_.mor.size(), "category " + c_.name);
    size_tables();
  }
  c_.comp[static_cast<std::size_t>(g) * c_.nm() + f] = gf;
}

FinCat CatBuilder::build() {
  size_tables();
  finalize(c_);
  return std::move(c_);
}

LawReport check_category(const FinCat& c) {
  LawReport rep;
  const int nm = c.nm(), no = c.no();
  if (static_cast<int>(c.ident.size()) != no || static_cast<int>(c.dom.size()) != nm ||
      static_cast<int>(c.cod.size()) != nm ||
      c.comp.size() != static_cast<std::size_t>(nm) * nm) {
    rep.broken("table sizes do not match object/morphism counts");
    return rep;
  }
  for (int x = 0; x < no; ++x) {
    int i = c.ident[x];
    if (i < 0 || i >= nm) {
      rep.broken("identity of object '" + c.obj[x] + "' is not a known morphism");
      continue;
    }
    if (c.dom[i] != x || c.cod[i] != x) rep.fail("identity-shape", c.obj[x]);
  }
  for (int f = 0; f < nm; ++f) {
    if (c.dom[f] < 0 || c.dom[f] >= no || c.cod[f] < 0 || c.cod[f] >= no)
      rep.broken("morphism '" + c.mor[f] + "' has an unknown endpoint");
  }
  if (!rep.structural.empty()) return rep;

  auto at = [&](int g, int f) { return c.comp[static_cast<std::size_t>(g) * nm + f]; };
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      int gf = at(g, f);
      bool composable = c.cod[f] == c.dom[g];
      if (!composable) {
        if (gf != -1) rep.fail("composition-domain", c.mor[g] + " o " + c.mor[f]);
        continue;
      }
      if (gf < 0 || gf >= nm) {
        rep.broken("composite " + c.mor[g] + " o " + c.mor[f] + " is missing or unknown");
        continue;
      }
      if (c.dom[gf] != c.dom[f] || c.cod[gf] != c.cod[g])
        rep.fail("composite-shape", c.mor[g] + " o " + c.mor[f]);
    }
  if (!rep.structural.empty()) return rep;

  for (int f = 0; f < nm; ++f) {
    if (at(f, c.ident[c.dom[f]]) != f) rep.fail("right-identity", c.mor[f]);
    if (at(c.ident[c.cod[f]], f) != f) rep.fail("left-identity", c.mor[f]);
  }
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (c.cod[f] != c.dom[g]) continue;
      int gf = at(g, f);
      for (int h = 0; h < nm; ++h) {
        if (c.cod[g] != c.dom[h]) continue;
        if (at(h, gf) != at(at(h, g), f))
          rep.fail("associativity", c.mor[h] + " o " + c.mor[g] + " o " + c.mor[f]);
      }
    }
  return rep;
}

bool same_cat(const FinCat& a, const FinCat& b) {
  if (&a == &b) return true;
  return a.obj == b.obj && a.mor == b.mor && a.dom == b.dom && a.cod == b.cod &&
         a.ident == b.ident && a.comp == b.comp;
}

std::string pair_id(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

FinCat product_category(const FinCat& a, const FinCat& b) {
  check_size(static_cast<std::size_t>(a.nm()) * b.nm(), "product " + a.name + " x " + b.name);
  FinCat p;
  p.name = a.name + "x" + b.name;
  const int ano = a.no(), bno = b.no(), anm = a.nm(), bnm = b.nm();
  for (int i = 0; i < ano; ++i)
    for (int j = 0; j < bno; ++j) {
      p.obj.push_back(pair_id(a.obj[i], b.obj[j]));
      p.ident.push_back(a.ident[i] * bnm + b.ident[j]);
    }
  for (int f = 0; f < anm; ++f)
    for (int g = 0; g < bnm; ++g) {
      p.mor.push_back(pair_id(a.mor[f], b.mor[g]));
      p.dom.push_back(a.dom[f] * bno + b.dom[g]);
      p.cod.push_back(a.cod[f] * bno + b.cod[g]);
    }
  const std::size_t n = p.mor.size();
  p.comp.assign(n * n, -1);
  for (int f2 = 0; f2 < anm; ++f2)
    for (int f1 = 0; f1 < anm; ++f1) {
      int fa = a.comp[static_cast<std::size_t>(f2) * anm + f1];
      if (fa < 0) continue;
      for (int g2 = 0; g2 < bnm; ++g2)
        for (int g1 = 0; g1 < bnm; ++g1) {
          int gb = b.comp[static_cast<std::size_t>(g2) * bnm + g1];
          if (gb < 0) continue;
          p.comp[static_cast<std::size_t>(f2 * bnm + g2) * n + (f1 * bnm + g1)] = fa * bnm + gb;
        }
    }
  finalize(p);
  return p;
}

FinCat terminal_category() {
  CatBuilder b("1");
  int x = b.object("*");
  int i = b.morphism("1_*", x, x);
  b.identity(x, i);
  b.set_comp(i, i, i);
  return b.build();
}

FinFunctor identity_functor(Ptr<FinCat> c) {
  FinFunctor f;
  f.src = c;
  f.dst = c;
  for (int i = 0; i < c->no(); ++i) f.omap.push_back(i);
  for (int i = 0; i < c->nm(); ++i) f.mmap.push_back(i);
  return f;
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
  if (!same_cat(*f.dst, *g.src)) throw StructuralError("functor composite: codomain/domain mismatch");
  FinFunctor h;
  h.src = f.src;
  h.dst = g.dst;
  for (int x : f.omap) h.omap.push_back(g.omap[x]);
  for (int m : f.mmap) h.mmap.push_back(g.mmap[m]);
  return h;
}

bool operator==(const FinFunctor& a, const FinFunctor& b) {
  return same_cat(*a.src, *b.src) && same_cat(*a.dst, *b.dst) && a.omap == b.omap &&
         a.mmap == b.mmap;
}

LawReport check_functor(const FinFunctor& F) {
  LawReport rep;
  const FinCat& A = *F.src;
  const FinCat& B = *F.dst;
  if (static_cast<int>(F.omap.size()) != A.no() || static_cast<int>(F.mmap.size()) != A.nm()) {
    rep.broken("functor tables do not cover the source category");
    return rep;
  }
  for (int x : F.omap)
    if (x < 0 || x >= B.no()) rep.broken("object map leaves the target category");
  for (int m : F.mmap)
    if (m < 0 || m >= B.nm()) rep.broken("morphism map leaves the target category");
  if (!rep.structural.empty()) return rep;
  for (int f = 0; f < A.nm(); ++f) {
    int Ff = F.mmap[f];
    if (B.dom[Ff] != F.omap[A.dom[f]]) rep.fail("preserves-domain", A.mor[f]);
    if (B.cod[Ff] != F.omap[A.cod[f]]) rep.fail("preserves-codomain", A.mor[f]);
  }
  for (int x = 0; x < A.no(); ++x)
    if (F.mmap[A.ident[x]] != B.ident[F.omap[x]]) rep.fail("preserves-identity", A.obj[x]);
  if (!rep.failures.empty()) return rep;
  for (int g = 0; g < A.nm(); ++g)
    for (int f = 0; f < A.nm(); ++f) {
      if (A.cod[f] != A.dom[g]) continue;
      if (F.mmap[A.compose(g, f)] != B.compose(F.mmap[g], F.mmap[f]))
        rep.fail("preserves-composition", A.mor[g] + " o " + A.mor[f]);
    }
  return rep;
}

LawReport check_nat(const FinNatTrans& t) {
  LawReport rep;
  if (!same_cat(*t.src.src, *t.dst.src) || !same_cat(*t.src.dst, *t.dst.dst)) {
    rep.broken("natural transformation between non-parallel functors");
    return rep;
  }
  const FinCat& A = *t.src.src;
  const FinCat& B = *t.src.dst;
  if (static_cast<int>(t.comp.size()) != A.no()) {
    rep.broken("component table does not cover the source objects");
    return rep;
  }
  for (int x = 0; x < A.no(); ++x) {
    int a = t.comp[x];
    if (a < 0 || a >= B.nm() || B.dom[a] != t.src.omap[x] || B.cod[a] != t.dst.omap[x])
      rep.fail("component-shape", A.obj[x]);
  }
  if (!rep.ok()) return rep;
  for (int f = 0; f < A.nm(); ++f) {
    int x = A.dom[f], y = A.cod[f];
    if (B.compose(t.dst.mmap[f], t.comp[x]) != B.compose(t.comp[y], t.src.mmap[f]))
      rep.fail("naturality", A.mor[f]);
  }
  return rep;
}

}  // namespace basechange
