#include "basechange/smcc.hpp"

#include <algorithm>

namespace basechange {

namespace {

std::string trip(const FinCat& c, int x, int y, int z) {
  return "(" + c.obj[x] + "," + c.obj[y] + "," + c.obj[z] + ")";
}

int thin_mor(const FinCat& c, int x, int y) {
  const auto& h = c.hom(x, y);
  return h.empty() ? -1 : h.front();
}

bool in_hom(const Smcc& v, int f, int x, int y) {
  return f >= 0 && f < v.nm() && v.dom(f) == x && v.cod(f) == y;
}

}  // namespace

int Smcc::path(std::initializer_list<int> fs) const {
  int acc = -1;
  for (int f : fs) acc = acc < 0 ? f : comp(f, acc);
  return acc;
}

int Smcc::inv(int f) const {
  int g = inv_.empty() ? cat->inverse(f) : inv_[f];
  if (g < 0) throw StructuralError("morphism " + cat->mor[f] + " of " + name + " is not invertible");
  return g;
}

int Smcc::transpose(int A, int B, int f) const {
  auto it = tr.find({A, B, f});
  if (it == tr.end())
    throw StructuralError("no transpose recorded for " + cat->mor[f] + " at " +
                          trip(*cat, A, B, cod(f)) + " in " + name);
  return it->second;
}

int Smcc::untranspose(int A, int C, int g) const { return comp(Ev(A, C), tenm(id(A), g)); }

int Smcc::name_of(int f) const {
  int x = dom(f);
  return transpose(x, unit, comp(f, R(x)));
}

int Smcc::unname(int x, int y, int nm_) const {
  return path({inv(R(x)), tenm(id(x), nm_), Ev(x, y)});
}

int Smcc::interchange(int x, int y, int z, int w) const {
  return path({A(x, y, ten(z, w)), tenm(id(x), inv(A(y, z, w))), tenm(id(x), tenm(S(y, z), id(w))),
               tenm(id(x), A(z, y, w)), inv(A(x, z, ten(y, w)))});
}

void finalize_smcc(Smcc& v) {
  v.inv_.assign(v.nm(), -1);
  for (int f = 0; f < v.nm(); ++f) v.inv_[f] = v.cat->inverse(f);
}

bool same_smcc(const Smcc& a, const Smcc& b) {
  if (&a == &b) return true;
  return same_cat(*a.cat, *b.cat) && a.tensor.omap == b.tensor.omap &&
         a.tensor.mmap == b.tensor.mmap && a.unit == b.unit && a.a == b.a && a.l == b.l &&
         a.r == b.r && a.s == b.s && a.ihom == b.ihom && a.ev == b.ev && a.tr == b.tr;
}

Smcc quantale_to_smcc(const QuantaleDesc& q) {
  const int n = static_cast<int>(q.carrier.size());
  if (n == 0) throw StructuralError("quantale " + q.name + " has an empty carrier");
  std::map<std::string, int> ix;
  for (int i = 0; i < n; ++i)
    if (!ix.emplace(q.carrier[i], i).second)
      throw StructuralError("quantale " + q.name + ": duplicate element " + q.carrier[i]);
  auto at = [&](const std::string& s) {
    auto it = ix.find(s);
    if (it == ix.end()) throw StructuralError("quantale " + q.name + ": unknown element '" + s + "'");
    return it->second;
  };
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [x, y] : q.leq) le[at(x)][at(y)] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && le[i][j] && le[j][i])
        throw StructuralError("quantale " + q.name + ": order is not antisymmetric at " +
                              q.carrier[i] + "," + q.carrier[j]);
  std::vector<int> mul(n * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = q.mult.find({q.carrier[i], q.carrier[j]});
      if (it == q.mult.end())
        throw StructuralError("quantale " + q.name + ": missing product " + q.carrier[i] + "*" +
                              q.carrier[j]);
      mul[i * n + j] = at(it->second);
    }
  const int e = at(q.unit);
  for (int i = 0; i < n; ++i) {
    if (mul[e * n + i] != i || mul[i * n + e] != i)
      throw StructuralError("quantale " + q.name + ": unit law fails at " + q.carrier[i]);
    for (int j = 0; j < n; ++j) {
      if (mul[i * n + j] != mul[j * n + i])
        throw StructuralError("quantale " + q.name + ": product not commutative at " +
                              q.carrier[i] + "," + q.carrier[j]);
      for (int k = 0; k < n; ++k)
        if (mul[mul[i * n + j] * n + k] != mul[i * n + mul[j * n + k]])
          throw StructuralError("quantale " + q.name + ": product not associative at " +
                                q.carrier[i] + "," + q.carrier[j] + "," + q.carrier[k]);
    }
  }
  // joins over all subsets, bitmask-indexed
  if (n > 16) throw SizeGuardError("quantale " + q.name + ": carrier too large for join table");
  const int subsets = 1 << n;
  std::vector<int> join(subsets, -1);
  for (int S = 0; S < subsets; ++S) {
    int best = -1;
    for (int u = 0; u < n; ++u) {
      bool upper = true;
      for (int i = 0; i < n && upper; ++i)
        if ((S >> i & 1) && !le[i][u]) upper = false;
      if (!upper) continue;
      if (best < 0 || le[u][best]) best = u;
    }
    for (int u = 0; u < n && best >= 0; ++u) {
      bool upper = true;
      for (int i = 0; i < n && upper; ++i)
        if ((S >> i & 1) && !le[i][u]) upper = false;
      if (upper && !le[best][u]) best = -1;
    }
    if (best < 0) throw StructuralError("quantale " + q.name + ": carrier is not a complete lattice");
    join[S] = best;
  }
  for (int a = 0; a < n; ++a)
    for (int S = 0; S < subsets; ++S) {
      int image = 0;
      for (int i = 0; i < n; ++i)
        if (S >> i & 1) image |= 1 << mul[a * n + i];
      if (mul[a * n + join[S]] != join[image]) {
        std::string w;
        for (int i = 0; i < n; ++i)
          if (S >> i & 1) w += (w.empty() ? "" : ",") + q.carrier[i];
        throw StructuralError("quantale " + q.name + ": product does not preserve joins; witness " +
                              q.carrier[a] + " * join{" + w + "}");
      }
    }

  CatBuilder b(q.name);
  for (const auto& x : q.carrier) b.object(x);
  std::vector<int> mor(n * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (le[i][j]) mor[i * n + j] = b.morphism(q.carrier[i] + "<=" + q.carrier[j], i, j);
  for (int i = 0; i < n; ++i) b.identity(i, mor[i * n + i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (le[i][j] && le[j][k]) b.set_comp(mor[j * n + k], mor[i * n + j], mor[i * n + k]);

  Smcc v;
  v.name = q.name;
  v.cat = std::make_shared<const FinCat>(b.build());
  v.sq = std::make_shared<const FinCat>(product_category(*v.cat, *v.cat));
  const FinCat& c = *v.cat;
  v.tensor.src = v.sq;
  v.tensor.dst = v.cat;
  v.tensor.omap = mul;
  for (int f = 0; f < c.nm(); ++f)
    for (int g = 0; g < c.nm(); ++g)
      v.tensor.mmap.push_back(
          mor[mul[c.dom[f] * n + c.dom[g]] * n + mul[c.cod[f] * n + c.cod[g]]]);
  v.unit = e;
  v.a.resize(n * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) v.a[(x * n + y) * n + z] = c.ident[mul[mul[x * n + y] * n + z]];
  for (int x = 0; x < n; ++x) {
    v.l.push_back(c.ident[x]);
    v.r.push_back(c.ident[x]);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) v.s.push_back(c.ident[mul[x * n + y]]);
  v.ihom.resize(n * n);
  v.ev.resize(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int S = 0;
      for (int t = 0; t < n; ++t)
        if (le[mul[x * n + t]][y]) S |= 1 << t;
      int h = join[S];
      v.ihom[x * n + y] = h;
      v.ev[x * n + y] = mor[mul[x * n + h] * n + y];
    }
  for (int A = 0; A < n; ++A)
    for (int B = 0; B < n; ++B)
      for (int C = 0; C < n; ++C) {
        int f = mor[mul[A * n + B] * n + C];
        if (f < 0) continue;
        int g = mor[B * n + v.ihom[A * n + C]];
        if (g < 0) throw StructuralError("quantale " + q.name + ": residuation fails");
        v.tr[{A, B, f}] = g;
      }
  finalize_smcc(v);
  return v;
}

Smcc monoid_to_smcc(const CommMonoidDesc& md) {
  const int n = static_cast<int>(md.elements.size());
  std::map<std::string, int> ix;
  for (int i = 0; i < n; ++i)
    if (!ix.emplace(md.elements[i], i).second)
      throw StructuralError("monoid " + md.name + ": duplicate element " + md.elements[i]);
  auto at = [&](const std::string& s) {
    auto it = ix.find(s);
    if (it == ix.end()) throw StructuralError("monoid " + md.name + ": unknown element '" + s + "'");
    return it->second;
  };
  std::vector<int> mul(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = md.mult.find({md.elements[i], md.elements[j]});
      if (it == md.mult.end())
        throw StructuralError("monoid " + md.name + ": missing product " + md.elements[i] + "*" +
                              md.elements[j]);
      mul[i * n + j] = at(it->second);
    }
  const int e = at(md.unit);
  for (int i = 0; i < n; ++i) {
    if (mul[e * n + i] != i || mul[i * n + e] != i)
      throw StructuralError("monoid " + md.name + ": unit law fails at " + md.elements[i]);
    for (int j = 0; j < n; ++j) {
      if (mul[i * n + j] != mul[j * n + i])
        throw StructuralError("monoid " + md.name + ": not commutative at " + md.elements[i] + "," +
                              md.elements[j]);
      for (int k = 0; k < n; ++k)
        if (mul[mul[i * n + j] * n + k] != mul[i * n + mul[j * n + k]])
          throw StructuralError("monoid " + md.name + ": not associative");
    }
  }
  CatBuilder b(md.name);
  int star = b.object("*");
  for (const auto& x : md.elements) b.morphism(x, star, star);
  b.identity(star, e);
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) b.set_comp(g, f, mul[g * n + f]);

  Smcc v;
  v.name = md.name;
  v.cat = std::make_shared<const FinCat>(b.build());
  v.sq = std::make_shared<const FinCat>(product_category(*v.cat, *v.cat));
  v.tensor.src = v.sq;
  v.tensor.dst = v.cat;
  v.tensor.omap = {0};
  v.tensor.mmap = mul;
  v.unit = 0;
  v.a = {e};
  v.l = {e};
  v.r = {e};
  v.s = {e};
  v.ihom = {0};
  v.ev = {e};
  for (int f = 0; f < n; ++f) v.tr[{0, 0, f}] = f;
  finalize_smcc(v);
  return v;
}

LawReport check_smcc(const Smcc& v) {
  LawReport rep = check_category(*v.cat);
  if (!rep.ok()) return rep;
  const FinCat& c = *v.cat;
  const int n = c.no(), nm = c.nm();
  if (!same_cat(*v.tensor.src, *v.sq) || !same_cat(*v.tensor.dst, *v.cat)) {
    rep.broken("tensor is not a functor on the square of the category");
    return rep;
  }
  rep.merge(check_functor(v.tensor), "tensor/");
  if (!rep.ok()) return rep;
  if (v.unit < 0 || v.unit >= n) {
    rep.broken("unit object missing");
    return rep;
  }
  if (static_cast<int>(v.a.size()) != n * n * n || static_cast<int>(v.l.size()) != n ||
      static_cast<int>(v.r.size()) != n || static_cast<int>(v.s.size()) != n * n ||
      static_cast<int>(v.ihom.size()) != n * n || static_cast<int>(v.ev.size()) != n * n) {
    rep.broken("coherence or closed-structure tables have the wrong size");
    return rep;
  }
  const int I = v.unit;
  auto iso = [&](int f) { return f >= 0 && f < nm && c.inverse(f) >= 0; };

  bool shapes = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int f = v.A(x, y, z);
        if (!in_hom(v, f, v.ten(v.ten(x, y), z), v.ten(x, v.ten(y, z))) || !iso(f)) {
          rep.fail("associator-iso", trip(c, x, y, z));
          shapes = false;
        }
      }
  for (int x = 0; x < n; ++x) {
    if (!in_hom(v, v.L(x), v.ten(I, x), x) || !iso(v.L(x))) {
      rep.fail("left-unitor-iso", c.obj[x]);
      shapes = false;
    }
    if (!in_hom(v, v.R(x), v.ten(x, I), x) || !iso(v.R(x))) {
      rep.fail("right-unitor-iso", c.obj[x]);
      shapes = false;
    }
    for (int y = 0; y < n; ++y)
      if (!in_hom(v, v.S(x, y), v.ten(x, y), v.ten(y, x)) || !iso(v.S(x, y))) {
        rep.fail("symmetry-iso", "(" + c.obj[x] + "," + c.obj[y] + ")");
        shapes = false;
      }
  }
  if (shapes) {
    for (int f = 0; f < nm; ++f)
      for (int g = 0; g < nm; ++g) {
        int x = c.dom[f], y = c.dom[g], x2 = c.cod[f], y2 = c.cod[g];
        if (v.comp(v.S(x2, y2), v.tenm(f, g)) != v.comp(v.tenm(g, f), v.S(x, y)))
          rep.fail("symmetry-naturality", "(" + c.mor[f] + "," + c.mor[g] + ")");
        for (int h = 0; h < nm; ++h) {
          int z = c.dom[h], z2 = c.cod[h];
          if (v.comp(v.A(x2, y2, z2), v.tenm(v.tenm(f, g), h)) !=
              v.comp(v.tenm(f, v.tenm(g, h)), v.A(x, y, z)))
            rep.fail("associator-naturality",
                     "(" + c.mor[f] + "," + c.mor[g] + "," + c.mor[h] + ")");
        }
      }
    for (int f = 0; f < nm; ++f) {
      int x = c.dom[f], y = c.cod[f];
      if (v.comp(v.L(y), v.tenm(v.id(I), f)) != v.comp(f, v.L(x)))
        rep.fail("left-unitor-naturality", c.mor[f]);
      if (v.comp(v.R(y), v.tenm(f, v.id(I))) != v.comp(f, v.R(x)))
        rep.fail("right-unitor-naturality", c.mor[f]);
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          for (int w = 0; w < n; ++w) {
            int lhs = v.comp(v.A(x, y, v.ten(z, w)), v.A(v.ten(x, y), z, w));
            int rhs = v.path({v.tenm(v.A(x, y, z), v.id(w)), v.A(x, v.ten(y, z), w),
                              v.tenm(v.id(x), v.A(y, z, w))});
            if (lhs != rhs)
              rep.fail("pentagon", "(" + c.obj[x] + "," + c.obj[y] + "," + c.obj[z] + "," +
                                       c.obj[w] + ")");
          }
          int hl = v.path({v.A(x, y, z), v.S(x, v.ten(y, z)), v.A(y, z, x)});
          int hr = v.path({v.tenm(v.S(x, y), v.id(z)), v.A(y, x, z), v.tenm(v.id(y), v.S(x, z))});
          if (hl != hr) rep.fail("hexagon", trip(c, x, y, z));
        }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (v.comp(v.tenm(v.id(x), v.L(y)), v.A(x, I, y)) != v.tenm(v.R(x), v.id(y)))
          rep.fail("triangle", "(" + c.obj[x] + "," + c.obj[y] + ")");
        if (v.comp(v.S(y, x), v.S(x, y)) != v.id(v.ten(x, y)))
          rep.fail("symmetry-involution", "(" + c.obj[x] + "," + c.obj[y] + ")");
      }
    if (v.L(I) != v.R(I)) rep.fail("unitors-agree-at-unit", c.obj[I]);
  }

  // closedness
  std::vector<bool> ev_ok(n * n, false);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int h = v.H(x, y);
      bool ok = h >= 0 && h < n && in_hom(v, v.Ev(x, y), v.ten(x, h), y);
      ev_ok[x * n + y] = ok;
      if (!ok) rep.fail("evaluation-shape", "(" + c.obj[x] + "," + c.obj[y] + ")");
    }
  for (const auto& [key, g] : v.tr) {
    auto [A, B, f] = key;
    if (A < 0 || A >= n || B < 0 || B >= n || f < 0 || f >= nm || c.dom[f] != v.ten(A, B))
      rep.fail("transpose-entry-shape", c.mor[std::clamp(f, 0, nm - 1)]);
  }
  for (int A = 0; A < n; ++A)
    for (int B = 0; B < n; ++B)
      for (int C = 0; C < n; ++C) {
        const std::string where = trip(c, A, B, C);
        const auto& src = c.hom(v.ten(A, B), C);
        int h = v.H(A, C);
        if (h < 0 || h >= n) {
          rep.fail("closedness", where);
          continue;
        }
        const auto& dst = c.hom(B, h);
        bool bad = src.size() != dst.size() || !ev_ok[A * n + C];
        std::vector<int> seen;
        for (int f : src) {
          auto it = v.tr.find({A, B, f});
          if (it == v.tr.end() || !in_hom(v, it->second, B, h)) {
            bad = true;
            continue;
          }
          seen.push_back(it->second);
          if (!ev_ok[A * n + C]) continue;
          int solutions = 0;
          for (int g : dst)
            if (v.untranspose(A, C, g) == f) ++solutions;
          if (solutions != 1 || v.untranspose(A, C, it->second) != f) bad = true;
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) bad = true;
        if (bad) rep.fail("closedness", where);
      }
  return rep;
}

QuantaleDesc quantale_B2() {
  QuantaleDesc q;
  q.name = "B2";
  q.carrier = {"0", "1"};
  q.leq = {{"0", "1"}};
  for (auto x : q.carrier)
    for (auto y : q.carrier) q.mult[{x, y}] = (x == "1" && y == "1") ? "1" : "0";
  q.unit = "1";
  return q;
}

namespace {
// elements of the three-element chains as multiples of 1/2
const char* const chain3[] = {"0", "1/2", "1"};
}

QuantaleDesc quantale_G3() {
  QuantaleDesc q;
  q.name = "G3";
  q.carrier = {"0", "1/2", "1"};
  q.leq = {{"0", "1/2"}, {"1/2", "1"}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q.mult[{chain3[i], chain3[j]}] = chain3[std::min(i, j)];
  q.unit = "1";
  return q;
}

QuantaleDesc quantale_L3() {
  QuantaleDesc q;
  q.name = "L3";
  q.carrier = {"0", "1/2", "1"};
  q.leq = {{"0", "1/2"}, {"1/2", "1"}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q.mult[{chain3[i], chain3[j]}] = chain3[std::max(0, i + j - 2)];
  q.unit = "1";
  return q;
}

CommMonoidDesc monoid_trivial() {
  CommMonoidDesc m;
  m.name = "T1";
  m.elements = {"e"};
  m.mult[{"e", "e"}] = "e";
  m.unit = "e";
  return m;
}

CommMonoidDesc monoid_cyclic(int order) {
  CommMonoidDesc m;
  m.name = "C" + std::to_string(order);
  for (int i = 0; i < order; ++i) m.elements.push_back(i == 0 ? "e" : "g" + std::to_string(i));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) m.mult[{m.elements[i], m.elements[j]}] = m.elements[(i + j) % order];
  m.unit = "e";
  return m;
}

// ---- monoidal functors ----

LawReport check_monoidal_functor(const MonoidalFunctor& G) {
  LawReport rep;
  if (!G.src || !G.dst) {
    rep.broken("monoidal functor without endpoints");
    return rep;
  }
  const Smcc& V = *G.src;
  const Smcc& W = *G.dst;
  if (!same_cat(*G.F.src, *V.cat) || !same_cat(*G.F.dst, *W.cat)) {
    rep.broken("functor " + G.name + " does not run between the declared categories");
    return rep;
  }
  rep.merge(check_functor(G.F), "functor/");
  if (!rep.ok()) return rep;
  const int n = V.n();
  if (static_cast<int>(G.m.size()) != n * n) {
    rep.broken("multiplication table of " + G.name + " has the wrong size");
    return rep;
  }
  const FinCat& vc = *V.cat;
  if (!in_hom(W, G.e, W.unit, G.ob(V.unit))) rep.fail("unit-shape", G.name);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!in_hom(W, G.M(x, y), W.ten(G.ob(x), G.ob(y)), G.ob(V.ten(x, y))))
        rep.fail("multiplication-shape", "(" + vc.obj[x] + "," + vc.obj[y] + ")");
  if (!rep.ok()) return rep;
  for (int f = 0; f < V.nm(); ++f)
    for (int g = 0; g < V.nm(); ++g) {
      int x = vc.dom[f], y = vc.dom[g], x2 = vc.cod[f], y2 = vc.cod[g];
      if (W.comp(G.mo(V.tenm(f, g)), G.M(x, y)) != W.comp(G.M(x2, y2), W.tenm(G.mo(f), G.mo(g))))
        rep.fail("multiplication-naturality", "(" + vc.mor[f] + "," + vc.mor[g] + ")");
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        int lhs = W.path({W.tenm(G.M(x, y), W.id(G.ob(z))), G.M(V.ten(x, y), z), G.mo(V.A(x, y, z))});
        int rhs = W.path({W.A(G.ob(x), G.ob(y), G.ob(z)), W.tenm(W.id(G.ob(x)), G.M(y, z)),
                          G.M(x, V.ten(y, z))});
        if (lhs != rhs) rep.fail("monoidal-associativity", trip(vc, x, y, z));
      }
      if (G.symmetric &&
          W.comp(G.mo(V.S(x, y)), G.M(x, y)) != W.comp(G.M(y, x), W.S(G.ob(x), G.ob(y))))
        rep.fail("monoidal-symmetry", "(" + vc.obj[x] + "," + vc.obj[y] + ")");
    }
  for (int x = 0; x < n; ++x) {
    int X = G.ob(x);
    if (W.path({W.tenm(G.e, W.id(X)), G.M(V.unit, x), G.mo(V.L(x))}) != W.L(X))
      rep.fail("monoidal-left-unit", vc.obj[x]);
    if (W.path({W.tenm(W.id(X), G.e), G.M(x, V.unit), G.mo(V.R(x))}) != W.R(X))
      rep.fail("monoidal-right-unit", vc.obj[x]);
  }
  return rep;
}

bool satisfies_symmetry(const MonoidalFunctor& G) {
  const Smcc& V = *G.src;
  const Smcc& W = *G.dst;
  for (int x = 0; x < V.n(); ++x)
    for (int y = 0; y < V.n(); ++y)
      if (W.comp(G.mo(V.S(x, y)), G.M(x, y)) != W.comp(G.M(y, x), W.S(G.ob(x), G.ob(y))))
        return false;
  return true;
}

bool is_strong(const MonoidalFunctor& G) {
  const FinCat& w = *G.dst->cat;
  if (w.inverse(G.e) < 0) return false;
  for (int f : G.m)
    if (w.inverse(f) < 0) return false;
  return true;
}

bool is_strict(const MonoidalFunctor& G) {
  const FinCat& w = *G.dst->cat;
  if (!w.is_identity(G.e)) return false;
  for (int f : G.m)
    if (!w.is_identity(f)) return false;
  return true;
}

MonoidalFunctor identity_monoidal(Ptr<Smcc> v) {
  MonoidalFunctor G;
  G.name = "1_" + v->name;
  G.src = v;
  G.dst = v;
  G.F = identity_functor(v->cat);
  G.e = v->id(v->unit);
  for (int x = 0; x < v->n(); ++x)
    for (int y = 0; y < v->n(); ++y) G.m.push_back(v->id(v->ten(x, y)));
  return G;
}

MonoidalFunctor compose(const MonoidalFunctor& H, const MonoidalFunctor& G) {
  if (!same_smcc(*G.dst, *H.src))
    throw StructuralError("monoidal composite " + H.name + " o " + G.name + ": bases differ");
  MonoidalFunctor K;
  K.name = H.name + "." + G.name;
  K.src = G.src;
  K.dst = H.dst;
  K.F = compose(H.F, G.F);
  const Smcc& W = *H.dst;
  K.e = W.comp(H.mo(G.e), H.e);
  const int n = G.src->n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) K.m.push_back(W.comp(H.mo(G.M(x, y)), H.M(G.ob(x), G.ob(y))));
  K.symmetric = G.symmetric && H.symmetric;
  return K;
}

bool operator==(const MonoidalFunctor& a, const MonoidalFunctor& b) {
  return same_smcc(*a.src, *b.src) && same_smcc(*a.dst, *b.dst) && a.F.omap == b.F.omap &&
         a.F.mmap == b.F.mmap && a.e == b.e && a.m == b.m;
}

LawReport check_monoidal_nat(const MonoidalNatTrans& t) {
  LawReport rep;
  const MonoidalFunctor& F = *t.src;
  const MonoidalFunctor& G = *t.dst;
  if (!same_smcc(*F.src, *G.src) || !same_smcc(*F.dst, *G.dst)) {
    rep.broken("monoidal transformation between non-parallel functors");
    return rep;
  }
  rep.merge(check_nat({F.F, G.F, t.comp}));
  if (!rep.ok()) return rep;
  const Smcc& V = *F.src;
  const Smcc& W = *F.dst;
  if (W.comp(t.at(V.unit), F.e) != G.e) rep.fail("monoidal-nat-unit", t.name);
  for (int x = 0; x < V.n(); ++x)
    for (int y = 0; y < V.n(); ++y)
      if (W.comp(G.M(x, y), W.tenm(t.at(x), t.at(y))) != W.comp(t.at(V.ten(x, y)), F.M(x, y)))
        rep.fail("monoidal-nat-multiplication",
                 "(" + V.cat->obj[x] + "," + V.cat->obj[y] + ")");
  return rep;
}

MonoidalNatTrans identity_monoidal_nat(Ptr<MonoidalFunctor> F) {
  MonoidalNatTrans t;
  t.name = "1_" + F->name;
  t.src = F;
  t.dst = F;
  for (int x = 0; x < F->src->n(); ++x) t.comp.push_back(F->dst->id(F->ob(x)));
  return t;
}

MonoidalNatTrans vcomp(const MonoidalNatTrans& b, const MonoidalNatTrans& a) {
  if (!(*a.dst == *b.src)) throw StructuralError("vertical composite " + b.name + "." + a.name + ": mismatch");
  MonoidalNatTrans t;
  t.name = b.name + "." + a.name;
  t.src = a.src;
  t.dst = b.dst;
  const Smcc& W = *a.src->dst;
  for (std::size_t x = 0; x < a.comp.size(); ++x) t.comp.push_back(W.comp(b.comp[x], a.comp[x]));
  return t;
}

MonoidalNatTrans whisker_right(const MonoidalNatTrans& a, Ptr<MonoidalFunctor> F) {
  MonoidalNatTrans t;
  t.name = a.name + "*" + F->name;
  t.src = std::make_shared<const MonoidalFunctor>(compose(*a.src, *F));
  t.dst = std::make_shared<const MonoidalFunctor>(compose(*a.dst, *F));
  for (int x = 0; x < F->src->n(); ++x) t.comp.push_back(a.comp[F->ob(x)]);
  return t;
}

MonoidalNatTrans whisker_left(Ptr<MonoidalFunctor> H, const MonoidalNatTrans& a) {
  MonoidalNatTrans t;
  t.name = H->name + "*" + a.name;
  t.src = std::make_shared<const MonoidalFunctor>(compose(*H, *a.src));
  t.dst = std::make_shared<const MonoidalFunctor>(compose(*H, *a.dst));
  for (int c : a.comp) t.comp.push_back(H->mo(c));
  return t;
}

bool operator==(const MonoidalNatTrans& a, const MonoidalNatTrans& b) {
  return *a.src == *b.src && *a.dst == *b.dst && a.comp == b.comp;
}

MonoidalFunctor thin_monoidal_functor(std::string name, Ptr<Smcc> src, Ptr<Smcc> dst,
                                      const std::vector<int>& omap) {
  const FinCat& V = *src->cat;
  const FinCat& W = *dst->cat;
  MonoidalFunctor G;
  G.name = std::move(name);
  G.src = src;
  G.dst = dst;
  G.F.src = src->cat;
  G.F.dst = dst->cat;
  G.F.omap = omap;
  auto need = [&](int x, int y, const std::string& what) {
    int f = thin_mor(W, x, y);
    if (f < 0) throw StructuralError("functor " + G.name + ": no " + what);
    return f;
  };
  for (int f = 0; f < V.nm(); ++f)
    G.F.mmap.push_back(need(omap[V.dom[f]], omap[V.cod[f]], "image for " + V.mor[f]));
  G.e = need(dst->unit, omap[src->unit], "unit comparison");
  for (int x = 0; x < V.no(); ++x)
    for (int y = 0; y < V.no(); ++y)
      G.m.push_back(need(dst->ten(omap[x], omap[y]), omap[src->ten(x, y)],
                         "multiplication at (" + V.obj[x] + "," + V.obj[y] + ")"));
  return G;
}

MonoidalNatTrans thin_monoidal_nat(std::string name, Ptr<MonoidalFunctor> F,
                                   Ptr<MonoidalFunctor> G) {
  MonoidalNatTrans t;
  t.name = std::move(name);
  t.src = F;
  t.dst = G;
  const FinCat& W = *F->dst->cat;
  for (int x = 0; x < F->src->n(); ++x) {
    int f = thin_mor(W, F->ob(x), G->ob(x));
    if (f < 0) throw StructuralError("transformation " + t.name + ": no component at " + F->src->cat->obj[x]);
    t.comp.push_back(f);
  }
  return t;
}

MonoidalFunctor monoid_hom_functor(std::string name, Ptr<Smcc> src, Ptr<Smcc> dst,
                                   const std::vector<int>& mmap) {
  MonoidalFunctor G;
  G.name = std::move(name);
  G.src = src;
  G.dst = dst;
  G.F.src = src->cat;
  G.F.dst = dst->cat;
  G.F.omap = {0};
  G.F.mmap = mmap;
  G.e = dst->id(0);
  G.m = {dst->id(0)};
  return G;
}

}  // namespace basechange
