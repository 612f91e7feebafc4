#include "basechange/enriched.hpp"

#include <functional>
#include <mutex>
#include <numeric>

namespace basechange {

namespace {

bool in_hom(const Smcc& v, int f, int x, int y) {
  return f >= 0 && f < v.nm() && v.dom(f) == x && v.cod(f) == y;
}

bool valid_obj(const Smcc& v, int x) { return x >= 0 && x < v.n(); }

std::string pr(const VCat& a, int A, int B) { return "(" + a.obj[A] + "," + a.obj[B] + ")"; }

// V-naturality of a family of names between two V-functors D-valued on an
// index category with `nobj` objects; hom maps given directly so callers can
// avoid materializing large tensor powers.
void family_naturality(LawReport& rep, const std::string& law, const VCat& D, int nobj,
                       const std::function<int(int, int)>& hom,
                       const std::function<int(int)>& Fob, const std::function<int(int)>& Gob,
                       const std::function<int(int, int)>& Fhm,
                       const std::function<int(int, int)>& Ghm,
                       const std::function<int(int)>& comp,
                       const std::function<std::string(int, int)>& where) {
  const Smcc& V = *D.base;
  for (int P = 0; P < nobj; ++P)
    for (int Q = 0; Q < nobj; ++Q) {
      int X = hom(P, Q);
      int lhs = V.path({V.inv(V.L(X)), V.tenm(comp(P), Ghm(P, Q)), D.c(Fob(P), Gob(P), Gob(Q))});
      int rhs = V.path({V.inv(V.R(X)), V.tenm(Fhm(P, Q), comp(Q)), D.c(Fob(P), Fob(Q), Gob(Q))});
      if (lhs != rhs) rep.fail(law, where(P, Q));
    }
}

std::mutex cache_mu;

}  // namespace

int VCat::o(const std::string& id) const {
  for (int i = 0; i < n(); ++i)
    if (obj[i] == id) return i;
  throw StructuralError("unknown object " + id + " in " + name);
}

bool same_vcat(const VCat& a, const VCat& b) {
  if (&a == &b) return true;
  return same_smcc(*a.base, *b.base) && a.obj == b.obj && a.hom == b.hom && a.comp == b.comp &&
         a.unit == b.unit;
}

LawReport check_vcat(const VCat& a) {
  LawReport rep;
  if (!a.base) {
    rep.broken("V-category " + a.name + " has no base");
    return rep;
  }
  const Smcc& V = *a.base;
  const int n = a.n();
  if (static_cast<int>(a.hom.size()) != n * n || static_cast<int>(a.comp.size()) != n * n * n ||
      static_cast<int>(a.unit.size()) != n) {
    rep.broken("tables of " + a.name + " have the wrong size");
    return rep;
  }
  for (int x : a.hom)
    if (!valid_obj(V, x)) {
      rep.broken("hom-object of " + a.name + " outside the base");
      return rep;
    }
  for (int A = 0; A < n; ++A) {
    if (!in_hom(V, a.j(A), V.unit, a.h(A, A))) rep.fail("unit-shape", a.obj[A]);
    for (int B = 0; B < n; ++B)
      for (int C = 0; C < n; ++C)
        if (!in_hom(V, a.c(A, B, C), V.ten(a.h(A, B), a.h(B, C)), a.h(A, C)))
          rep.fail("composition-shape", "(" + a.obj[A] + "," + a.obj[B] + "," + a.obj[C] + ")");
  }
  if (!rep.ok()) return rep;
  for (int A = 0; A < n; ++A)
    for (int B = 0; B < n; ++B) {
      int X = a.h(A, B);
      if (V.comp(a.c(A, A, B), V.tenm(a.j(A), V.id(X))) != V.L(X)) rep.fail("left-unit", pr(a, A, B));
      if (V.comp(a.c(A, B, B), V.tenm(V.id(X), a.j(B))) != V.R(X)) rep.fail("right-unit", pr(a, A, B));
      for (int C = 0; C < n; ++C) {
        int Y = a.h(B, C);
        for (int D = 0; D < n; ++D) {
          int Z = a.h(C, D);
          int lhs = V.comp(a.c(A, C, D), V.tenm(a.c(A, B, C), V.id(Z)));
          int rhs = V.path({V.A(X, Y, Z), V.tenm(V.id(X), a.c(B, C, D)), a.c(A, B, D)});
          if (lhs != rhs)
            rep.fail("associativity",
                     "(" + a.obj[A] + "," + a.obj[B] + "," + a.obj[C] + "," + a.obj[D] + ")");
        }
      }
    }
  return rep;
}

int name_comp(const VCat& a, int A, int B, int C, int g, int f) {
  const Smcc& V = *a.base;
  return V.path({V.lI_inv(), V.tenm(f, g), a.c(A, B, C)});
}

int precompose(const VCat& a, int f, int A, int B, int X) {
  const Smcc& V = *a.base;
  int H = a.h(B, X);
  return V.path({V.inv(V.L(H)), V.tenm(f, V.id(H)), a.c(A, B, X)});
}

int postcompose(const VCat& a, int g, int X, int Y, int A) {
  const Smcc& V = *a.base;
  int H = a.h(A, X);
  return V.path({V.inv(V.R(H)), V.tenm(V.id(H), g), a.c(A, X, Y)});
}

int name_path(const VCat& a, const std::vector<int>& objs, const std::vector<int>& names) {
  if (names.empty() || objs.size() != names.size() + 1)
    throw StructuralError("name path of " + a.name + " has mismatched lengths");
  int acc = names[0];
  for (std::size_t i = 1; i < names.size(); ++i)
    acc = name_comp(a, objs[0], objs[i], objs[i + 1], names[i], acc);
  return acc;
}

int name_inverse(const VCat& a, int A, int B, int f) {
  const Smcc& V = *a.base;
  for (int g : V.C().hom(V.unit, a.h(B, A)))
    if (name_comp(a, A, B, A, g, f) == a.j(A) && name_comp(a, B, A, B, f, g) == a.j(B)) return g;
  return -1;
}

// ---- V-functors ----

bool operator==(const VFunctor& a, const VFunctor& b) {
  return same_vcat(*a.src, *b.src) && same_vcat(*a.dst, *b.dst) && a.omap == b.omap &&
         a.hmap == b.hmap;
}

LawReport check_vfunctor(const VFunctor& F) {
  LawReport rep;
  if (!F.src || !F.dst) {
    rep.broken("V-functor without endpoints");
    return rep;
  }
  const VCat& a = *F.src;
  const VCat& b = *F.dst;
  if (!same_smcc(*a.base, *b.base)) {
    rep.broken("V-functor " + a.name + " -> " + b.name + " changes the base");
    return rep;
  }
  const Smcc& V = *a.base;
  const int n = a.n();
  if (static_cast<int>(F.omap.size()) != n || static_cast<int>(F.hmap.size()) != n * n) {
    rep.broken("V-functor tables have the wrong size");
    return rep;
  }
  for (int x : F.omap)
    if (x < 0 || x >= b.n()) {
      rep.broken("V-functor sends an object outside " + b.name);
      return rep;
    }
  for (int A = 0; A < n; ++A)
    for (int B = 0; B < n; ++B)
      if (!in_hom(V, F.hm(A, B), a.h(A, B), b.h(F.ob(A), F.ob(B))))
        rep.fail("hom-map-shape", pr(a, A, B));
  if (!rep.ok()) return rep;
  for (int A = 0; A < n; ++A) {
    if (V.comp(F.hm(A, A), a.j(A)) != b.j(F.ob(A))) rep.fail("preserves-identity", a.obj[A]);
    for (int B = 0; B < n; ++B)
      for (int C = 0; C < n; ++C) {
        int lhs = V.comp(F.hm(A, C), a.c(A, B, C));
        int rhs = V.comp(b.c(F.ob(A), F.ob(B), F.ob(C)), V.tenm(F.hm(A, B), F.hm(B, C)));
        if (lhs != rhs)
          rep.fail("preserves-composition",
                   "(" + a.obj[A] + "," + a.obj[B] + "," + a.obj[C] + ")");
      }
  }
  return rep;
}

VFunctor identity_vfunctor(Ptr<VCat> a) {
  VFunctor F;
  F.src = a;
  F.dst = a;
  F.omap.resize(a->n());
  std::iota(F.omap.begin(), F.omap.end(), 0);
  for (int x : a->hom) F.hmap.push_back(a->base->id(x));
  return F;
}

VFunctor compose(const VFunctor& G, const VFunctor& F) {
  if (!same_vcat(*F.dst, *G.src))
    throw StructuralError("V-functor composite: " + F.dst->name + " is not " + G.src->name);
  const Smcc& V = *F.src->base;
  VFunctor K;
  K.src = F.src;
  K.dst = G.dst;
  const int n = F.src->n();
  for (int A = 0; A < n; ++A) K.omap.push_back(G.ob(F.ob(A)));
  for (int A = 0; A < n; ++A)
    for (int B = 0; B < n; ++B) K.hmap.push_back(V.comp(G.hm(F.ob(A), F.ob(B)), F.hm(A, B)));
  return K;
}

LawReport check_vnat(const VNatTrans& t) {
  LawReport rep;
  rep.merge(check_vfunctor(t.src), "source/");
  rep.merge(check_vfunctor(t.dst), "target/");
  if (!rep.ok()) return rep;
  const VFunctor& F = t.src;
  const VFunctor& G = t.dst;
  if (!same_vcat(*F.src, *G.src) || !same_vcat(*F.dst, *G.dst)) {
    rep.broken("V-transformation between non-parallel V-functors");
    return rep;
  }
  const VCat& a = *F.src;
  const VCat& b = *F.dst;
  const Smcc& V = *a.base;
  if (static_cast<int>(t.comp.size()) != a.n()) {
    rep.broken("V-transformation has the wrong number of components");
    return rep;
  }
  for (int A = 0; A < a.n(); ++A)
    if (!in_hom(V, t.comp[A], V.unit, b.h(F.ob(A), G.ob(A)))) rep.fail("component-shape", a.obj[A]);
  if (!rep.ok()) return rep;
  family_naturality(
      rep, "naturality", b, a.n(), [&](int P, int Q) { return a.h(P, Q); },
      [&](int P) { return F.ob(P); }, [&](int P) { return G.ob(P); },
      [&](int P, int Q) { return F.hm(P, Q); }, [&](int P, int Q) { return G.hm(P, Q); },
      [&](int P) { return t.comp[P]; }, [&](int P, int Q) { return pr(a, P, Q); });
  return rep;
}

VNatTrans identity_vnat(const VFunctor& F) {
  VNatTrans t{F, F, {}};
  for (int A = 0; A < F.src->n(); ++A) t.comp.push_back(F.dst->j(F.ob(A)));
  return t;
}

VNatTrans vcomp(const VNatTrans& b, const VNatTrans& a) {
  if (!(a.dst == b.src)) throw StructuralError("vertical composite of unmatched V-transformations");
  VNatTrans t{a.src, b.dst, {}};
  const VCat& D = *a.src.dst;
  for (int A = 0; A < a.src.src->n(); ++A)
    t.comp.push_back(name_comp(D, a.src.ob(A), a.dst.ob(A), b.dst.ob(A), b.comp[A], a.comp[A]));
  return t;
}

VNatTrans whisker_right(const VNatTrans& a, const VFunctor& F) {
  VNatTrans t{compose(a.src, F), compose(a.dst, F), {}};
  for (int A = 0; A < F.src->n(); ++A) t.comp.push_back(a.comp[F.ob(A)]);
  return t;
}

VNatTrans whisker_left(const VFunctor& H, const VNatTrans& a) {
  VNatTrans t{compose(H, a.src), compose(H, a.dst), {}};
  for (int A = 0; A < a.src.src->n(); ++A)
    t.comp.push_back(H.on_name(a.src.ob(A), a.dst.ob(A), a.comp[A]));
  return t;
}

// ---- constructions on V-categories ----

VCat tensor_vcat(const VCat& a, const VCat& b) {
  if (!same_smcc(*a.base, *b.base)) throw StructuralError("tensor of V-categories over different bases");
  const Smcc& V = *a.base;
  const int na = a.n(), nb = b.n(), n = na * nb;
  check_size(static_cast<std::size_t>(n) * n, "hom table of " + a.name + "*" + b.name);
  VCat t;
  t.name = a.name + "*" + b.name;
  t.base = a.base;
  for (int A = 0; A < na; ++A)
    for (int B = 0; B < nb; ++B) t.obj.push_back(pair_id(a.obj[A], b.obj[B]));
  for (int P = 0; P < n; ++P)
    for (int Q = 0; Q < n; ++Q) t.hom.push_back(V.ten(a.h(P / nb, Q / nb), b.h(P % nb, Q % nb)));
  t.comp.reserve(static_cast<std::size_t>(n) * n * n);
  for (int P = 0; P < n; ++P)
    for (int Q = 0; Q < n; ++Q)
      for (int R = 0; R < n; ++R) {
        int A = P / nb, A1 = Q / nb, A2 = R / nb, B = P % nb, B1 = Q % nb, B2 = R % nb;
        int swap = V.interchange(a.h(A, A1), b.h(B, B1), a.h(A1, A2), b.h(B1, B2));
        t.comp.push_back(V.comp(V.tenm(a.c(A, A1, A2), b.c(B, B1, B2)), swap));
      }
  for (int P = 0; P < n; ++P) t.unit.push_back(V.comp(V.tenm(a.j(P / nb), b.j(P % nb)), V.lI_inv()));
  return t;
}

VCat unit_vcat(Ptr<Smcc> v) {
  VCat t;
  t.name = "I_" + v->name;
  t.base = v;
  t.obj = {"*"};
  t.hom = {v->unit};
  t.comp = {v->L(v->unit)};
  t.unit = {v->id(v->unit)};
  return t;
}

VCat opposite_vcat(const VCat& a) {
  const Smcc& V = *a.base;
  const int n = a.n();
  VCat t;
  t.name = a.name + "^op";
  t.base = a.base;
  t.obj = a.obj;
  for (int A = 0; A < n; ++A)
    for (int B = 0; B < n; ++B) t.hom.push_back(a.h(B, A));
  for (int A = 0; A < n; ++A)
    for (int B = 0; B < n; ++B)
      for (int C = 0; C < n; ++C) t.comp.push_back(V.comp(a.c(C, B, A), V.S(a.h(B, A), a.h(C, B))));
  t.unit = a.unit;
  return t;
}

int Underlying::of(int A, int B, int nm) const {
  auto it = index.find({A, B, nm});
  if (it == index.end()) throw StructuralError("name is not an underlying morphism");
  return it->second;
}

Underlying underlying(const VCat& a, bool identify) {
  const Smcc& V = *a.base;
  Underlying u;
  if (identify && a.self_of) {
    u.cat = a.self_of->cat;
    for (int f = 0; f < V.nm(); ++f) {
      int nm = V.name_of(f);
      u.name.push_back(nm);
      u.index[{V.dom(f), V.cod(f), nm}] = f;
    }
    return u;
  }
  const int n = a.n();
  CatBuilder cb(a.name + "_0");
  for (const auto& x : a.obj) cb.object(x);
  for (int A = 0; A < n; ++A)
    for (int B = 0; B < n; ++B)
      for (int nm : V.C().hom(V.unit, a.h(A, B))) {
        int f = cb.morphism("[" + V.C().mor[nm] + "]:" + a.obj[A] + "->" + a.obj[B], A, B);
        u.name.push_back(nm);
        u.index[{A, B, nm}] = f;
      }
  const int m = static_cast<int>(u.name.size());
  check_size(static_cast<std::size_t>(m), "underlying category of " + a.name);
  FinCat& raw = cb.raw();
  for (int A = 0; A < n; ++A) cb.identity(A, u.of(A, A, a.j(A)));
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (raw.cod[f] == raw.dom[g]) {
        int A = raw.dom[f], B = raw.cod[f], C = raw.cod[g];
        cb.set_comp(g, f, u.of(A, C, name_comp(a, A, B, C, u.name[g], u.name[f])));
      }
  u.cat = std::make_shared<const FinCat>(cb.build());
  return u;
}

FinCat underlying_cat(const VCat& a) { return *underlying(a).cat; }

VFunctor tensor_vfunctor(const VFunctor& F, const VFunctor& G, Ptr<VCat> src, Ptr<VCat> dst) {
  const Smcc& V = *F.src->base;
  const int na = F.src->n(), nb = G.src->n(), nb2 = G.dst->n();
  if (src->n() != na * nb || dst->n() != F.dst->n() * nb2)
    throw StructuralError("tensor of V-functors: endpoint sizes do not match");
  VFunctor T;
  T.src = src;
  T.dst = dst;
  const int n = na * nb;
  for (int P = 0; P < n; ++P) T.omap.push_back(F.ob(P / nb) * nb2 + G.ob(P % nb));
  for (int P = 0; P < n; ++P)
    for (int Q = 0; Q < n; ++Q) T.hmap.push_back(V.tenm(F.hm(P / nb, Q / nb), G.hm(P % nb, Q % nb)));
  return T;
}

VFunctor sym_vfunctor(const VCat& a, const VCat& b, Ptr<VCat> ab, Ptr<VCat> ba) {
  const Smcc& V = *a.base;
  const int na = a.n(), nb = b.n(), n = na * nb;
  VFunctor T;
  T.src = ab;
  T.dst = ba;
  for (int P = 0; P < n; ++P) T.omap.push_back((P % nb) * na + P / nb);
  for (int P = 0; P < n; ++P)
    for (int Q = 0; Q < n; ++Q) T.hmap.push_back(V.S(a.h(P / nb, Q / nb), b.h(P % nb, Q % nb)));
  return T;
}

Ptr<VCat> self_enriched(Ptr<Smcc> v) {
  static std::map<const Smcc*, std::pair<Ptr<Smcc>, Ptr<VCat>>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(v.get());
    if (it != cache.end()) return it->second.second;
  }
  const Smcc& V = *v;
  const int n = V.n();
  check_size(static_cast<std::size_t>(n) * n * n, "autoenrichment of " + V.name);
  VCat t;
  t.name = "u" + V.name;
  t.base = v;
  t.obj = V.C().obj;
  t.self_of = v;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.hom.push_back(V.H(x, y));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int P = V.H(x, y), Q = V.H(y, z);
        int f = V.path({V.inv(V.A(x, P, Q)), V.tenm(V.Ev(x, y), V.id(Q)), V.Ev(y, z)});
        t.comp.push_back(V.transpose(x, V.ten(P, Q), f));
      }
  for (int x = 0; x < n; ++x) t.unit.push_back(V.name_of(V.id(x)));
  auto p = std::make_shared<const VCat>(std::move(t));
  std::lock_guard<std::mutex> lock(cache_mu);
  return cache.emplace(v.get(), std::make_pair(v, p)).first->second.second;
}

VFunctor hom_vfunctor(Ptr<VCat> a) {
  const Smcc& V = *a->base;
  auto op = std::make_shared<const VCat>(opposite_vcat(*a));
  VFunctor F;
  F.src = std::make_shared<const VCat>(tensor_vcat(*op, *a));
  F.dst = self_enriched(a->base);
  const int n = a->n(), N = n * n;
  for (int P = 0; P < N; ++P) F.omap.push_back(a->h(P / n, P % n));
  for (int P = 0; P < N; ++P)
    for (int Q = 0; Q < N; ++Q) {
      int A = P / n, B = P % n, A1 = Q / n, B1 = Q % n;
      int X = a->h(A, B), Pm = a->h(A1, A), Qm = a->h(B, B1);
      int phi = V.path({V.inv(V.A(X, Pm, Qm)), V.tenm(V.S(X, Pm), V.id(Qm)),
                        V.tenm(a->c(A1, A, B), V.id(Qm)), a->c(A1, B, B1)});
      F.hmap.push_back(V.transpose(X, V.ten(Pm, Qm), phi));
    }
  return F;
}

// ---- symmetric monoidal closed V-categories ----

int name_tensor(const SymMonClosedVCat& m, int A, int A2, int B, int B2, int f, int g) {
  const Smcc& V = m.base();
  const int n = m.n();
  return V.path({V.lI_inv(), V.tenm(f, g), m.tensor.hm(A * n + B, A2 * n + B2)});
}

VFunctor left_tensor_vfunctor(const SymMonClosedVCat& m, int M) {
  const Smcc& V = m.base();
  const VCat& a = *m.m;
  const int n = m.n();
  VFunctor F;
  F.src = m.m;
  F.dst = m.m;
  for (int N = 0; N < n; ++N) F.omap.push_back(m.ten(M, N));
  for (int N = 0; N < n; ++N)
    for (int N2 = 0; N2 < n; ++N2) {
      int H = a.h(N, N2);
      F.hmap.push_back(V.path({V.inv(V.L(H)), V.tenm(a.j(M), V.id(H)), m.tensor.hm(M * n + N, M * n + N2)}));
    }
  return F;
}

VFunctor closure_vfunctor(const SymMonClosedVCat& m, int M) {
  VFunctor F;
  F.src = m.m;
  F.dst = m.m;
  F.omap = m.closure[M].rmap;
  F.hmap = m.closure[M].rhom;
  return F;
}

Ptr<Smcc> underlying_smcc(const SymMonClosedVCat& m, bool identify) {
  const VCat& a = *m.m;
  if (identify && a.self_of) return a.self_of;
  const Smcc& V = m.base();
  const int n = m.n();
  Underlying u = underlying(a, identify);
  const FinCat& c = *u.cat;
  Smcc U;
  U.name = m.name + "_0";
  U.cat = u.cat;
  U.sq = std::make_shared<const FinCat>(product_category(c, c));
  U.tensor.src = U.sq;
  U.tensor.dst = U.cat;
  const int nm = c.nm();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) U.tensor.omap.push_back(m.ten(x, y));
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      int A = c.dom[f], A2 = c.cod[f], B = c.dom[g], B2 = c.cod[g];
      U.tensor.mmap.push_back(
          u.of(m.ten(A, B), m.ten(A2, B2), name_tensor(m, A, A2, B, B2, u.name[f], u.name[g])));
    }
  U.unit = m.unit_obj;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z)
        U.a.push_back(u.of(m.ten(m.ten(x, y), z), m.ten(x, m.ten(y, z)), m.A(x, y, z)));
      U.s.push_back(u.of(m.ten(x, y), m.ten(y, x), m.S(x, y)));
      U.ihom.push_back(m.ihom(x, y));
      U.ev.push_back(u.of(m.ten(x, m.ihom(x, y)), y, m.closure[x].counit[y]));
    }
  for (int x = 0; x < n; ++x) {
    U.l.push_back(u.of(m.ten(m.unit_obj, x), x, m.L(x)));
    U.r.push_back(u.of(m.ten(x, m.unit_obj), x, m.R(x)));
  }
  for (int A = 0; A < n; ++A) {
    VFunctor R = closure_vfunctor(m, A);
    for (int B = 0; B < n; ++B) {
      int AB = m.ten(A, B);
      int eta = m.closure[A].unit[B];
      for (int C = 0; C < n; ++C)
        for (int f : c.hom(AB, C)) {
          int rf = R.on_name(AB, C, u.name[f]);
          int hat = name_comp(a, B, m.ihom(A, AB), m.ihom(A, C), rf, eta);
          U.tr[{A, B, f}] = u.of(B, m.ihom(A, C), hat);
        }
    }
  }
  (void)V;
  finalize_smcc(U);
  return std::make_shared<const Smcc>(std::move(U));
}

LawReport check_symmonclosed(const SymMonClosedVCat& m) {
  LawReport rep;
  if (!m.m || !m.mm) {
    rep.broken("monoidal V-category " + m.name + " is missing its carrier");
    return rep;
  }
  rep.merge(check_vcat(*m.m), "vcat/");
  if (!rep.ok()) return rep;
  const VCat& a = *m.m;
  const Smcc& V = m.base();
  const int n = m.n();
  if (!same_vcat(*m.mm, tensor_vcat(a, a))) {
    rep.broken("square of " + m.name + " is not its tensor with itself");
    return rep;
  }
  if (!same_vcat(*m.tensor.src, *m.mm) || !same_vcat(*m.tensor.dst, a)) {
    rep.broken("tensor of " + m.name + " has the wrong endpoints");
    return rep;
  }
  rep.merge(check_vfunctor(m.tensor), "tensor/");
  if (!rep.ok()) return rep;
  if (m.unit_obj < 0 || m.unit_obj >= n || static_cast<int>(m.a.size()) != n * n * n ||
      static_cast<int>(m.l.size()) != n || static_cast<int>(m.r.size()) != n ||
      static_cast<int>(m.s.size()) != n * n || static_cast<int>(m.closure.size()) != n) {
    rep.broken("coherence tables of " + m.name + " have the wrong size");
    return rep;
  }
  const int I = m.unit_obj;
  auto T = [&](int x, int y, int x2, int y2) { return m.tensor.hm(x * n + y, x2 * n + y2); };
  auto ob3 = [&](int P) { return std::array<int, 3>{P / (n * n), (P / n) % n, P % n}; };
  auto w1 = [&](int P, int Q) { return "(" + a.obj[P] + "," + a.obj[Q] + ")"; };
  auto w2 = [&](int P, int Q) {
    return "(" + pair_id(a.obj[P / n], a.obj[P % n]) + "," + pair_id(a.obj[Q / n], a.obj[Q % n]) + ")";
  };
  auto w3 = [&](int P, int Q) {
    auto p = ob3(P), q = ob3(Q);
    return "((" + a.obj[p[0]] + "," + a.obj[p[1]] + "," + a.obj[p[2]] + "),(" + a.obj[q[0]] + "," +
           a.obj[q[1]] + "," + a.obj[q[2]] + "))";
  };
  // shapes and invertibility
  for (int x = 0; x < n; ++x) {
    if (!in_hom(V, m.L(x), V.unit, a.h(m.ten(I, x), x))) rep.fail("left-unitor-shape", a.obj[x]);
    else if (name_inverse(a, m.ten(I, x), x, m.L(x)) < 0) rep.fail("left-unitor-iso", a.obj[x]);
    if (!in_hom(V, m.R(x), V.unit, a.h(m.ten(x, I), x))) rep.fail("right-unitor-shape", a.obj[x]);
    else if (name_inverse(a, m.ten(x, I), x, m.R(x)) < 0) rep.fail("right-unitor-iso", a.obj[x]);
    for (int y = 0; y < n; ++y) {
      if (!in_hom(V, m.S(x, y), V.unit, a.h(m.ten(x, y), m.ten(y, x))))
        rep.fail("symmetry-shape", w1(x, y));
      else if (name_inverse(a, m.ten(x, y), m.ten(y, x), m.S(x, y)) < 0)
        rep.fail("symmetry-iso", w1(x, y));
      for (int z = 0; z < n; ++z) {
        int s = m.ten(m.ten(x, y), z), t = m.ten(x, m.ten(y, z));
        if (!in_hom(V, m.A(x, y, z), V.unit, a.h(s, t)))
          rep.fail("associator-shape", w1(x, y) + a.obj[z]);
        else if (name_inverse(a, s, t, m.A(x, y, z)) < 0)
          rep.fail("associator-iso", w1(x, y) + a.obj[z]);
      }
    }
  }
  if (!rep.ok()) return rep;
  // V-naturality of the coherence cells
  family_naturality(
      rep, "associator-naturality", a, n * n * n,
      [&](int P, int Q) {
        auto p = ob3(P), q = ob3(Q);
        return V.ten(V.ten(a.h(p[0], q[0]), a.h(p[1], q[1])), a.h(p[2], q[2]));
      },
      [&](int P) { auto p = ob3(P); return m.ten(m.ten(p[0], p[1]), p[2]); },
      [&](int P) { auto p = ob3(P); return m.ten(p[0], m.ten(p[1], p[2])); },
      [&](int P, int Q) {
        auto p = ob3(P), q = ob3(Q);
        return V.comp(T(m.ten(p[0], p[1]), p[2], m.ten(q[0], q[1]), q[2]),
                      V.tenm(T(p[0], p[1], q[0], q[1]), V.id(a.h(p[2], q[2]))));
      },
      [&](int P, int Q) {
        auto p = ob3(P), q = ob3(Q);
        return V.path({V.A(a.h(p[0], q[0]), a.h(p[1], q[1]), a.h(p[2], q[2])),
                       V.tenm(V.id(a.h(p[0], q[0])), T(p[1], p[2], q[1], q[2])),
                       T(p[0], m.ten(p[1], p[2]), q[0], m.ten(q[1], q[2]))});
      },
      [&](int P) { auto p = ob3(P); return m.A(p[0], p[1], p[2]); }, w3);
  family_naturality(
      rep, "left-unitor-naturality", a, n, [&](int P, int Q) { return V.ten(V.unit, a.h(P, Q)); },
      [&](int P) { return m.ten(I, P); }, [&](int P) { return P; },
      [&](int P, int Q) { return V.comp(T(I, P, I, Q), V.tenm(a.j(I), V.id(a.h(P, Q)))); },
      [&](int P, int Q) { return V.L(a.h(P, Q)); }, [&](int P) { return m.L(P); }, w1);
  family_naturality(
      rep, "right-unitor-naturality", a, n, [&](int P, int Q) { return V.ten(a.h(P, Q), V.unit); },
      [&](int P) { return m.ten(P, I); }, [&](int P) { return P; },
      [&](int P, int Q) { return V.comp(T(P, I, Q, I), V.tenm(V.id(a.h(P, Q)), a.j(I))); },
      [&](int P, int Q) { return V.R(a.h(P, Q)); }, [&](int P) { return m.R(P); }, w1);
  family_naturality(
      rep, "symmetry-naturality", a, n * n, [&](int P, int Q) { return m.mm->h(P, Q); },
      [&](int P) { return m.ten(P / n, P % n); }, [&](int P) { return m.ten(P % n, P / n); },
      [&](int P, int Q) { return T(P / n, P % n, Q / n, Q % n); },
      [&](int P, int Q) {
        return V.comp(T(P % n, P / n, Q % n, Q / n), V.S(a.h(P / n, Q / n), a.h(P % n, Q % n)));
      },
      [&](int P) { return m.S(P / n, P % n); }, w2);
  if (!rep.ok()) return rep;
  // closure
  for (int M = 0; M < n; ++M) {
    const Closure& cl = m.closure[M];
    const std::string at = "closure " + a.obj[M] + "/";
    if (static_cast<int>(cl.rmap.size()) != n || static_cast<int>(cl.rhom.size()) != n * n ||
        static_cast<int>(cl.unit.size()) != n || static_cast<int>(cl.counit.size()) != n) {
      rep.broken(at + "tables have the wrong size");
      continue;
    }
    VFunctor R = closure_vfunctor(m, M);
    VFunctor L = left_tensor_vfunctor(m, M);
    LawReport sub = check_vfunctor(R);
    if (sub.ok()) sub.merge(check_vnat({identity_vfunctor(m.m), compose(R, L), cl.unit}), "unit/");
    if (sub.ok()) sub.merge(check_vnat({compose(L, R), identity_vfunctor(m.m), cl.counit}), "counit/");
    if (sub.ok())
      for (int N = 0; N < n; ++N) {
        int MN = m.ten(M, N), RMN = R.ob(MN);
        int Leta = L.on_name(N, RMN, cl.unit[N]);
        if (name_comp(a, MN, m.ten(M, RMN), MN, cl.counit[MN], Leta) != a.j(MN))
          sub.fail("triangle-left", a.obj[N]);
        int P = N, RP = R.ob(P), MRP = m.ten(M, RP);
        int Reps = R.on_name(MRP, P, cl.counit[P]);
        if (name_comp(a, RP, R.ob(MRP), RP, Reps, cl.unit[RP]) != a.j(RP))
          sub.fail("triangle-right", a.obj[P]);
      }
    rep.merge(sub, at);
  }
  if (!rep.ok()) return rep;
  // Mac Lane axioms and closedness of the underlying category
  try {
    rep.merge(check_smcc(*underlying_smcc(m, false)), "underlying/");
  } catch (const StructuralError& e) {
    rep.broken(std::string("underlying category: ") + e.what());
  }
  return rep;
}

bool same_symmonclosed(const SymMonClosedVCat& a, const SymMonClosedVCat& b) {
  if (&a == &b) return true;
  if (!same_vcat(*a.m, *b.m) || a.tensor.omap != b.tensor.omap || a.tensor.hmap != b.tensor.hmap ||
      a.unit_obj != b.unit_obj || a.a != b.a || a.l != b.l || a.r != b.r || a.s != b.s ||
      a.closure.size() != b.closure.size())
    return false;
  for (std::size_t i = 0; i < a.closure.size(); ++i) {
    const Closure &x = a.closure[i], &y = b.closure[i];
    if (x.rmap != y.rmap || x.rhom != y.rhom || x.unit != y.unit || x.counit != y.counit) return false;
  }
  return true;
}

// ---- monoidal V-functors ----

namespace {

void check_monv_symmetry(LawReport& rep, const MonVFunctor& S) {
  const SymMonClosedVCat& M = *S.src;
  const SymMonClosedVCat& N = *S.dst;
  const VCat& b = *N.m;
  for (int x = 0; x < M.n(); ++x)
    for (int y = 0; y < M.n(); ++y) {
      int X = S.ob(x), Y = S.ob(y);
      int lhs = name_comp(b, N.ten(X, Y), S.ob(M.ten(x, y)), S.ob(M.ten(y, x)),
                          S.F.on_name(M.ten(x, y), M.ten(y, x), M.S(x, y)), S.M(x, y));
      int rhs = name_comp(b, N.ten(X, Y), N.ten(Y, X), S.ob(M.ten(y, x)), S.M(y, x), N.S(X, Y));
      if (lhs != rhs) rep.fail("monoidal-symmetry", "(" + M.m->obj[x] + "," + M.m->obj[y] + ")");
    }
}

}  // namespace

LawReport check_monvfunctor(const MonVFunctor& S) {
  LawReport rep;
  if (!S.src || !S.dst) {
    rep.broken("monoidal V-functor without endpoints");
    return rep;
  }
  const SymMonClosedVCat& M = *S.src;
  const SymMonClosedVCat& N = *S.dst;
  if (!S.F.src || !S.F.dst || !same_vcat(*S.F.src, *M.m) || !same_vcat(*S.F.dst, *N.m)) {
    rep.broken("monoidal V-functor " + S.name + " does not run between the declared V-categories");
    return rep;
  }
  rep.merge(check_vfunctor(S.F), "functor/");
  if (!rep.ok()) return rep;
  const VCat& a = *M.m;
  const VCat& b = *N.m;
  const Smcc& V = *a.base;
  const int n = M.n();
  if (static_cast<int>(S.m.size()) != n * n) {
    rep.broken("multiplication table of " + S.name + " has the wrong size");
    return rep;
  }
  const int IM = M.unit_obj, IN = N.unit_obj;
  if (!in_hom(V, S.e, V.unit, b.h(IN, S.ob(IM)))) rep.fail("unit-shape", S.name);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!in_hom(V, S.M(x, y), V.unit, b.h(N.ten(S.ob(x), S.ob(y)), S.ob(M.ten(x, y)))))
        rep.fail("multiplication-shape", pr(a, x, y));
  if (!rep.ok()) return rep;
  const int nn = N.n();
  family_naturality(
      rep, "multiplication-naturality", b, n * n, [&](int P, int Q) { return M.mm->h(P, Q); },
      [&](int P) { return N.ten(S.ob(P / n), S.ob(P % n)); },
      [&](int P) { return S.ob(M.ten(P / n, P % n)); },
      [&](int P, int Q) {
        int x = P / n, y = P % n, x2 = Q / n, y2 = Q % n;
        return V.comp(N.tensor.hm(S.ob(x) * nn + S.ob(y), S.ob(x2) * nn + S.ob(y2)),
                      V.tenm(S.F.hm(x, x2), S.F.hm(y, y2)));
      },
      [&](int P, int Q) {
        int x = P / n, y = P % n, x2 = Q / n, y2 = Q % n;
        return V.comp(S.F.hm(M.ten(x, y), M.ten(x2, y2)), M.tensor.hm(P, Q));
      },
      [&](int P) { return S.M(P / n, P % n); },
      [&](int P, int Q) {
        return "(" + pair_id(a.obj[P / n], a.obj[P % n]) + "," + pair_id(a.obj[Q / n], a.obj[Q % n]) + ")";
      });
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int X = S.ob(x), Y = S.ob(y), Z = S.ob(z);
        int xy = M.ten(x, y), yz = M.ten(y, z);
        int lhs = name_path(b, {N.ten(N.ten(X, Y), Z), N.ten(S.ob(xy), Z), S.ob(M.ten(xy, z)),
                                S.ob(M.ten(x, yz))},
                            {name_tensor(N, N.ten(X, Y), S.ob(xy), Z, Z, S.M(x, y), b.j(Z)),
                             S.M(xy, z),
                             S.F.on_name(M.ten(xy, z), M.ten(x, yz), M.A(x, y, z))});
        int rhs = name_path(b, {N.ten(N.ten(X, Y), Z), N.ten(X, N.ten(Y, Z)), N.ten(X, S.ob(yz)),
                                S.ob(M.ten(x, yz))},
                            {N.A(X, Y, Z), name_tensor(N, X, X, N.ten(Y, Z), S.ob(yz), b.j(X), S.M(y, z)),
                             S.M(x, yz)});
        if (lhs != rhs)
          rep.fail("monoidal-associativity",
                   "(" + a.obj[x] + "," + a.obj[y] + "," + a.obj[z] + ")");
      }
  if (S.symmetric) check_monv_symmetry(rep, S);
  for (int x = 0; x < n; ++x) {
    int X = S.ob(x);
    int lhs = name_path(b, {N.ten(IN, X), N.ten(S.ob(IM), X), S.ob(M.ten(IM, x)), X},
                        {name_tensor(N, IN, S.ob(IM), X, X, S.e, b.j(X)), S.M(IM, x),
                         S.F.on_name(M.ten(IM, x), x, M.L(x))});
    if (lhs != N.L(X)) rep.fail("monoidal-left-unit", a.obj[x]);
    int rhs = name_path(b, {N.ten(X, IN), N.ten(X, S.ob(IM)), S.ob(M.ten(x, IM)), X},
                        {name_tensor(N, X, X, IN, S.ob(IM), b.j(X), S.e), S.M(x, IM),
                         S.F.on_name(M.ten(x, IM), x, M.R(x))});
    if (rhs != N.R(X)) rep.fail("monoidal-right-unit", a.obj[x]);
  }
  return rep;
}

bool monv_satisfies_symmetry(const MonVFunctor& S) {
  LawReport rep;
  check_monv_symmetry(rep, S);
  return rep.ok();
}

bool is_strict(const MonVFunctor& S) {
  const SymMonClosedVCat& M = *S.src;
  const SymMonClosedVCat& N = *S.dst;
  if (S.ob(M.unit_obj) != N.unit_obj || S.e != N.m->j(N.unit_obj)) return false;
  for (int x = 0; x < M.n(); ++x)
    for (int y = 0; y < M.n(); ++y) {
      int t = N.ten(S.ob(x), S.ob(y));
      if (t != S.ob(M.ten(x, y)) || S.M(x, y) != N.m->j(t)) return false;
    }
  return true;
}

MonVFunctor identity_monvfunctor(Ptr<SymMonClosedVCat> m) {
  MonVFunctor S;
  S.name = "1_" + m->name;
  S.src = m;
  S.dst = m;
  S.F = identity_vfunctor(m->m);
  S.e = m->m->j(m->unit_obj);
  for (int x = 0; x < m->n(); ++x)
    for (int y = 0; y < m->n(); ++y) S.m.push_back(m->m->j(m->ten(x, y)));
  return S;
}

MonVFunctor compose(const MonVFunctor& T, const MonVFunctor& S) {
  if (!same_symmonclosed(*S.dst, *T.src))
    throw StructuralError("monoidal V-functor composite " + T.name + "." + S.name + ": mismatch");
  MonVFunctor K;
  K.name = T.name + "." + S.name;
  K.src = S.src;
  K.dst = T.dst;
  K.F = compose(T.F, S.F);
  const SymMonClosedVCat& M = *S.src;
  const SymMonClosedVCat& N = *S.dst;
  const SymMonClosedVCat& P = *T.dst;
  const VCat& c = *P.m;
  int IN = N.unit_obj;
  K.e = name_comp(c, P.unit_obj, T.ob(IN), K.ob(M.unit_obj),
                  T.F.on_name(IN, S.ob(M.unit_obj), S.e), T.e);
  for (int x = 0; x < M.n(); ++x)
    for (int y = 0; y < M.n(); ++y) {
      int sx = S.ob(x), sy = S.ob(y), sxy = N.ten(sx, sy);
      K.m.push_back(name_comp(c, P.ten(T.ob(sx), T.ob(sy)), T.ob(sxy), K.ob(M.ten(x, y)),
                              T.F.on_name(sxy, S.ob(M.ten(x, y)), S.M(x, y)), T.M(sx, sy)));
    }
  K.symmetric = S.symmetric && T.symmetric;
  return K;
}

bool operator==(const MonVFunctor& a, const MonVFunctor& b) {
  return same_symmonclosed(*a.src, *b.src) && same_symmonclosed(*a.dst, *b.dst) &&
         a.F.omap == b.F.omap && a.F.hmap == b.F.hmap && a.e == b.e && a.m == b.m;
}

VNatTrans as_vnat(const MonVNatTrans& t) { return {t.src->F, t.dst->F, t.comp}; }

LawReport check_monvnat(const MonVNatTrans& t) {
  LawReport rep;
  const MonVFunctor& S = *t.src;
  const MonVFunctor& T = *t.dst;
  if (!same_symmonclosed(*S.src, *T.src) || !same_symmonclosed(*S.dst, *T.dst)) {
    rep.broken("monoidal V-transformation between non-parallel functors");
    return rep;
  }
  rep.merge(check_vnat(as_vnat(t)));
  if (!rep.ok()) return rep;
  const SymMonClosedVCat& M = *S.src;
  const SymMonClosedVCat& N = *S.dst;
  const VCat& b = *N.m;
  int IM = M.unit_obj;
  if (name_comp(b, N.unit_obj, S.ob(IM), T.ob(IM), t.comp[IM], S.e) != T.e)
    rep.fail("monoidal-nat-unit", t.name);
  for (int x = 0; x < M.n(); ++x)
    for (int y = 0; y < M.n(); ++y) {
      int xy = M.ten(x, y);
      int from = N.ten(S.ob(x), S.ob(y)), mid = N.ten(T.ob(x), T.ob(y));
      int lhs = name_comp(b, from, mid, T.ob(xy), T.M(x, y),
                          name_tensor(N, S.ob(x), T.ob(x), S.ob(y), T.ob(y), t.comp[x], t.comp[y]));
      int rhs = name_comp(b, from, S.ob(xy), T.ob(xy), t.comp[xy], S.M(x, y));
      if (lhs != rhs) rep.fail("monoidal-nat-multiplication", pr(*M.m, x, y));
    }
  return rep;
}

MonVNatTrans identity_monvnat(Ptr<MonVFunctor> S) {
  MonVNatTrans t;
  t.name = "1_" + S->name;
  t.src = S;
  t.dst = S;
  for (int x = 0; x < S->src->n(); ++x) t.comp.push_back(S->dst->m->j(S->ob(x)));
  return t;
}

MonVNatTrans vcomp(const MonVNatTrans& b, const MonVNatTrans& a) {
  if (!(*a.dst == *b.src)) throw StructuralError("vertical composite " + b.name + "." + a.name + ": mismatch");
  MonVNatTrans t;
  t.name = b.name + "." + a.name;
  t.src = a.src;
  t.dst = b.dst;
  const VCat& D = *a.src->dst->m;
  for (int x = 0; x < a.src->src->n(); ++x)
    t.comp.push_back(name_comp(D, a.src->ob(x), a.dst->ob(x), b.dst->ob(x), b.comp[x], a.comp[x]));
  return t;
}

MonVNatTrans whisker_right(const MonVNatTrans& a, Ptr<MonVFunctor> F) {
  MonVNatTrans t;
  t.name = a.name + "*" + F->name;
  t.src = std::make_shared<const MonVFunctor>(compose(*a.src, *F));
  t.dst = std::make_shared<const MonVFunctor>(compose(*a.dst, *F));
  for (int x = 0; x < F->src->n(); ++x) t.comp.push_back(a.comp[F->ob(x)]);
  return t;
}

MonVNatTrans whisker_left(Ptr<MonVFunctor> H, const MonVNatTrans& a) {
  MonVNatTrans t;
  t.name = H->name + "*" + a.name;
  t.src = std::make_shared<const MonVFunctor>(compose(*H, *a.src));
  t.dst = std::make_shared<const MonVFunctor>(compose(*H, *a.dst));
  for (int x = 0; x < a.src->src->n(); ++x)
    t.comp.push_back(H->F.on_name(a.src->ob(x), a.dst->ob(x), a.comp[x]));
  return t;
}

bool operator==(const MonVNatTrans& a, const MonVNatTrans& b) {
  return *a.src == *b.src && *a.dst == *b.dst && a.comp == b.comp;
}

MonoidalFunctor underlying_monoidal(const MonVFunctor& S, Ptr<Smcc> src0, Ptr<Smcc> dst0) {
  Underlying us = underlying(*S.src->m), ud = underlying(*S.dst->m);
  if (!same_cat(*us.cat, *src0->cat) || !same_cat(*ud.cat, *dst0->cat))
    throw StructuralError("underlying functor of " + S.name + ": categories do not match");
  const FinCat& c = *us.cat;
  MonoidalFunctor G;
  G.name = S.name + "_0";
  G.src = src0;
  G.dst = dst0;
  G.F.src = src0->cat;
  G.F.dst = dst0->cat;
  G.F.omap = S.F.omap;
  for (int f = 0; f < c.nm(); ++f) {
    int A = c.dom[f], B = c.cod[f];
    G.F.mmap.push_back(ud.of(S.ob(A), S.ob(B), S.F.on_name(A, B, us.name[f])));
  }
  const SymMonClosedVCat& M = *S.src;
  const SymMonClosedVCat& N = *S.dst;
  G.e = ud.of(N.unit_obj, S.ob(M.unit_obj), S.e);
  for (int x = 0; x < M.n(); ++x)
    for (int y = 0; y < M.n(); ++y)
      G.m.push_back(ud.of(N.ten(S.ob(x), S.ob(y)), S.ob(M.ten(x, y)), S.M(x, y)));
  G.symmetric = S.symmetric;
  return G;
}

MonoidalNatTrans underlying_monoidal_nat(const MonVNatTrans& t, Ptr<MonoidalFunctor> S0,
                                         Ptr<MonoidalFunctor> T0) {
  Underlying ud = underlying(*t.src->dst->m);
  MonoidalNatTrans u;
  u.name = t.name + "_0";
  u.src = S0;
  u.dst = T0;
  for (int x = 0; x < t.src->src->n(); ++x)
    u.comp.push_back(ud.of(t.src->ob(x), t.dst->ob(x), t.comp[x]));
  return u;
}

}  // namespace basechange
