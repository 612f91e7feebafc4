#include "basechange/autoenrich.hpp"

#include <map>
#include <mutex>

#include "basechange/groth.hpp"
#include "basechange/parallel.hpp"

namespace basechange {

namespace {

std::mutex auto_mu;

std::string pr(const VCat& a, int A, int B) { return "(" + a.obj[A] + "," + a.obj[B] + ")"; }

}  // namespace

Ptr<SymMonClosedVCat> autoenrich(Ptr<Smcc> v) {
  static std::map<const Smcc*, std::pair<Ptr<Smcc>, Ptr<SymMonClosedVCat>>> cache;
  {
    std::lock_guard<std::mutex> lock(auto_mu);
    auto it = cache.find(v.get());
    if (it != cache.end()) return it->second.second;
  }
  const Smcc& V = *v;
  const int n = V.n();
  auto u = std::make_shared<SymMonClosedVCat>();
  u->name = "u" + V.name;
  u->m = self_enriched(v);
  u->mm = std::make_shared<const VCat>(tensor_vcat(*u->m, *u->m));
  u->tensor.src = u->mm;
  u->tensor.dst = u->m;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) u->tensor.omap.push_back(V.ten(x, y));
  // [x,X]⊗[y,Y] → [x⊗y, X⊗Y], transpose of (Ev⊗Ev) after the middle swap.
  for (int P = 0; P < n * n; ++P)
    for (int Q = 0; Q < n * n; ++Q) {
      int x = P / n, y = P % n, X = Q / n, Y = Q % n;
      int hx = V.H(x, X), hy = V.H(y, Y);
      int f = V.comp(V.tenm(V.Ev(x, X), V.Ev(y, Y)), V.interchange(x, y, hx, hy));
      u->tensor.hmap.push_back(V.transpose(V.ten(x, y), V.ten(hx, hy), f));
    }
  u->unit_obj = V.unit;
  for (int f : V.a) u->a.push_back(V.name_of(f));
  for (int f : V.l) u->l.push_back(V.name_of(f));
  for (int f : V.r) u->r.push_back(V.name_of(f));
  for (int f : V.s) u->s.push_back(V.name_of(f));
  const VCat& a = *u->m;
  for (int M = 0; M < n; ++M) {
    Closure cl;
    for (int P = 0; P < n; ++P) cl.rmap.push_back(V.H(M, P));
    for (int P = 0; P < n; ++P)
      for (int P2 = 0; P2 < n; ++P2) cl.rhom.push_back(V.transpose(V.H(M, P), V.H(P, P2), a.c(M, P, P2)));
    for (int N = 0; N < n; ++N) cl.unit.push_back(V.name_of(V.transpose(M, N, V.id(V.ten(M, N)))));
    for (int P = 0; P < n; ++P) cl.counit.push_back(V.name_of(V.Ev(M, P)));
    u->closure.push_back(std::move(cl));
  }
  Ptr<SymMonClosedVCat> p = u;
  std::lock_guard<std::mutex> lock(auto_mu);
  return cache.emplace(v.get(), std::make_pair(v, p)).first->second.second;
}

MonVFunctor grave(Ptr<MonoidalFunctor> G) {
  const Smcc& V = *G->src;
  const Smcc& W = *G->dst;
  auto uV = autoenrich(G->src);
  MonVFunctor S;
  S.name = G->name + "`";
  S.src = push_monvcat(*G, *uV);
  S.dst = autoenrich(G->dst);
  S.F.src = S.src->m;
  S.F.dst = S.dst->m;
  S.F.omap = G->F.omap;
  const int n = V.n();
  for (int X = 0; X < n; ++X)
    for (int Y = 0; Y < n; ++Y) {
      int HXY = V.H(X, Y);
      int f = W.comp(G->mo(V.Ev(X, Y)), G->M(X, HXY));
      S.F.hmap.push_back(W.transpose(G->ob(X), G->ob(HXY), f));
    }
  S.e = W.name_of(G->e);
  for (int f : G->m) S.m.push_back(W.name_of(f));
  S.symmetric = G->symmetric;
  return S;
}

MonVNatTrans grave_nat(Ptr<MonoidalNatTrans> a) {
  const Smcc& W = *a->src->dst;
  auto uV = autoenrich(a->src->src);
  MonVNatTrans t;
  t.name = a->name + "`";
  t.src = std::make_shared<const MonVFunctor>(grave(a->src));
  t.dst = std::make_shared<const MonVFunctor>(
      compose(grave(a->dst), push_nat_family_mon(*a, *uV)));
  for (int f : a->comp) t.comp.push_back(W.name_of(f));
  return t;
}

VFunctor internal_hom_vfunctor(const SymMonClosedVCat& m) {
  const VCat& a = *m.m;
  const Smcc& V = m.base();
  const int n = m.n();
  auto op = std::make_shared<const VCat>(opposite_vcat(a));
  VFunctor F;
  F.src = std::make_shared<const VCat>(tensor_vcat(*op, a));
  F.dst = m.m;
  for (int P = 0; P < n * n; ++P) F.omap.push_back(m.ihom(P / n, P % n));
  for (int P = 0; P < n * n; ++P)
    for (int Q = 0; Q < n * n; ++Q) {
      int x = P / n, y = P % n, x2 = Q / n, y2 = Q % n;
      int H = m.ihom(x, y);
      int src = m.ten(x2, H), mid = m.ten(x, H);
      // h(x',x) → h(x'⊗[x,y], x⊗[x,y]) → h(x'⊗[x,y], y)
      int hx = a.h(x2, x);
      int t1 = V.path({V.inv(V.R(hx)), V.tenm(V.id(hx), a.j(H)), m.tensor.hm(x2 * n + H, x * n + H)});
      int t2 = postcompose(a, m.closure[x].counit[y], mid, y, src);
      int theta = V.comp(a.c(src, y, y2), V.tenm(V.comp(t2, t1), V.id(a.h(y, y2))));
      int phi = V.comp(precompose(a, m.closure[x2].unit[H], H, m.ihom(x2, src), m.ihom(x2, y2)),
                       m.closure[x2].rhom[src * n + y2]);
      F.hmap.push_back(V.comp(phi, theta));
    }
  return F;
}

// ---- superposition ----

VCat SuperposedVCat::as_vcat() const {
  VCat t;
  t.name = "B/" + a->name;
  t.base = a->base;
  t.obj = a->obj;
  const int n = a->n();
  for (int A = 0; A < n; ++A)
    for (int B = 0; B < n; ++B) t.hom.push_back(hB(A, B));
  t.comp = comp;
  t.unit = unit;
  return t;
}

int SuperposedVCat::act_right(int A, int B, int C) const {
  const Smcc& V = *a->base;
  const int n = a->n();
  int H = a->h(B, C);
  int g = V.path({V.inv(V.L(H)), V.tenm(a->j(A), V.id(H)), homB.hm(A * n + B, A * n + C)});
  return V.untranspose(hB(A, B), hB(A, C), g);
}

int SuperposedVCat::act_left(int A, int B, int C) const {
  const Smcc& V = *a->base;
  const int n = a->n();
  int H = a->h(A, B);
  int g = V.path({V.inv(V.R(H)), V.tenm(V.id(H), a->j(C)), homB.hm(B * n + C, A * n + C)});
  return V.comp(V.untranspose(hB(B, C), hB(A, C), g), V.S(H, hB(B, C)));
}

LawReport check_superposed(const SuperposedVCat& b) {
  LawReport rep;
  const VCat& a = *b.a;
  const int n = a.n();
  if (b.homB.src->n() != n * n || static_cast<int>(b.unit.size()) != n ||
      static_cast<int>(b.comp.size()) != n * n * n) {
    rep.broken("superposition tables do not fit " + a.name);
    return rep;
  }
  rep.merge(check_vfunctor(b.homB), "profunctor/");
  if (!rep.ok()) return rep;
  VCat B = b.as_vcat();
  rep.merge(check_vcat(B), "vcat/");
  if (!rep.ok()) return rep;
  const Smcc& V = *a.base;
  for (int A = 0; A < n; ++A)
    for (int X = 0; X < n; ++X)
      for (int Y = 0; Y < n; ++Y)
        for (int Z = 0; Z < n; ++Z) {
          const std::string w = "(" + a.obj[A] + "," + a.obj[X] + "," + a.obj[Y] + "," + a.obj[Z] + ")";
          // B(A,X)⊗(B(X,Y)⊗a(Y,Z))
          {
            int p = B.h(A, X), q = B.h(X, Y), r = a.h(Y, Z);
            int lhs = V.comp(B.c(A, X, Z), V.tenm(V.id(p), b.act_right(X, Y, Z)));
            int rhs = V.path({V.inv(V.A(p, q, r)), V.tenm(B.c(A, X, Y), V.id(r)), b.act_right(A, Y, Z)});
            if (lhs != rhs) rep.fail("composition-right-action", w);
          }
          // a(A,X)⊗(B(X,Y)⊗B(Y,Z))
          {
            int p = a.h(A, X), q = B.h(X, Y), r = B.h(Y, Z);
            int lhs = V.comp(b.act_left(A, X, Z), V.tenm(V.id(p), B.c(X, Y, Z)));
            int rhs = V.path({V.inv(V.A(p, q, r)), V.tenm(b.act_left(A, X, Y), V.id(r)), B.c(A, Y, Z)});
            if (lhs != rhs) rep.fail("composition-left-action", w);
          }
          // (B(A,X)⊗a(X,Y))⊗B(Y,Z)
          {
            int p = B.h(A, X), q = a.h(X, Y), r = B.h(Y, Z);
            int lhs = V.comp(B.c(A, Y, Z), V.tenm(b.act_right(A, X, Y), V.id(r)));
            int rhs = V.path({V.A(p, q, r), V.tenm(V.id(p), b.act_left(X, Y, Z)), B.c(A, X, Z)});
            if (lhs != rhs) rep.fail("composition-middle", w);
          }
        }
  for (int A = 0; A < n; ++A)
    for (int X = 0; X < n; ++X) {
      int H = a.h(A, X);
      int lhs = V.path({V.inv(V.L(H)), V.tenm(b.unit[A], V.id(H)), b.act_right(A, A, X)});
      int rhs = V.path({V.inv(V.R(H)), V.tenm(V.id(H), b.unit[X]), b.act_left(A, X, X)});
      if (lhs != rhs) rep.fail("unit-extranatural", pr(a, A, X));
    }
  return rep;
}

namespace {

VFunctor inclusion(const SuperposedVCat& b, Ptr<VCat> target, bool right) {
  const VCat& a = *b.a;
  const Smcc& V = *a.base;
  const int n = a.n();
  if (target->n() != n) throw StructuralError("superposed inclusion: target has the wrong objects");
  VFunctor S;
  S.src = b.a;
  S.dst = target;
  for (int A = 0; A < n; ++A) S.omap.push_back(A);
  for (int A = 0; A < n; ++A)
    for (int B = 0; B < n; ++B) {
      int H = a.h(A, B);
      S.hmap.push_back(
          right ? V.path({V.inv(V.R(H)), V.tenm(V.id(H), b.unit[B]), b.act_left(A, B, B)})
                : V.path({V.inv(V.L(H)), V.tenm(b.unit[A], V.id(H)), b.act_right(A, A, B)}));
    }
  return S;
}

}  // namespace

VFunctor superposed_inclusion(const SuperposedVCat& b, Ptr<VCat> target) {
  return inclusion(b, std::move(target), false);
}

VFunctor superposed_inclusion_right(const SuperposedVCat& b, Ptr<VCat> target) {
  return inclusion(b, std::move(target), true);
}

SuperposedVCat reconstruction_superposition(Ptr<SymMonClosedVCat> m) {
  auto U0 = normalization_0(m);
  auto pushed = push_monvcat(*U0, *autoenrich(underlying_smcc(*m)));
  MonVFunctor U = canonical_normalization(m);
  SuperposedVCat b;
  b.a = m->m;
  b.homB = compose(U.F, internal_hom_vfunctor(*m));
  b.comp = pushed->m->comp;
  b.unit = pushed->m->unit;
  return b;
}

std::vector<int> canonical_isos(const SymMonClosedVCat& m) {
  const VCat& a = *m.m;
  const Smcc& V = m.base();
  const int n = m.n();
  const int I = m.unit_obj;
  std::vector<int> out;
  for (int A = 0; A < n; ++A) {
    int AI = m.ten(A, I);
    for (int B = 0; B < n; ++B) {
      const Closure& cl = m.closure[A];
      out.push_back(V.path({precompose(a, m.R(A), AI, A, B), cl.rhom[AI * n + B],
                            precompose(a, cl.unit[I], I, m.ihom(A, AI), m.ihom(A, B))}));
    }
  }
  return out;
}

Reconstruction reconstruct_iso(Ptr<SymMonClosedVCat> m) {
  Reconstruction R;
  R.m = m;
  LawReport& rep = R.report;
  const VCat& a = *m->m;
  const Smcc& V = m->base();
  const int n = m->n();
  auto M0 = underlying_smcc(*m);
  auto U0 = normalization_0(m);
  R.pushed = push_monvcat(*U0, *autoenrich(M0));
  SuperposedVCat b = reconstruction_superposition(m);
  rep.merge(check_superposed(b), "superposition/");
  if (!rep.ok()) return R;
  VFunctor S = superposed_inclusion(b, R.pushed->m);
  if (!(S == superposed_inclusion_right(b, R.pushed->m))) rep.fail("inclusion-variants-agree", m->name);
  if (S.hmap != canonical_isos(*m)) rep.fail("canonical-isomorphisms", m->name);
  const VCat& p = *R.pushed->m;
  R.S.name = "S^" + m->name;
  R.S.src = m;
  R.S.dst = R.pushed;
  R.S.F = S;
  R.S.e = p.j(R.pushed->unit_obj);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) R.S.m.push_back(p.j(R.pushed->ten(x, y)));
  for (int x = 0; x < n; ++x)
    if (S.ob(x) != x) rep.fail("identity-on-objects", a.obj[x]);
  rep.merge(check_strict_symmetric(R.S), "strict/");
  R.S_inv.name = R.S.name + "^-1";
  R.S_inv.src = R.pushed;
  R.S_inv.dst = m;
  R.S_inv.F.src = R.pushed->m;
  R.S_inv.F.dst = m->m;
  R.S_inv.F.omap = S.omap;
  for (int A = 0; A < n; ++A)
    for (int B = 0; B < n; ++B) {
      int inv = V.inv(S.hm(A, B));
      if (inv < 0) rep.fail("invertible", pr(a, A, B));
      R.S_inv.F.hmap.push_back(inv);
    }
  if (!rep.ok()) return R;
  R.S_inv.e = a.j(m->unit_obj);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) R.S_inv.m.push_back(a.j(m->ten(x, y)));
  if (!(compose(R.S_inv.F, S) == identity_vfunctor(m->m))) rep.fail("inverse-left", m->name);
  if (!(compose(S, R.S_inv.F) == identity_vfunctor(R.pushed->m))) rep.fail("inverse-right", m->name);
  rep.merge(check_theta_normalization_identity(m), "theta/");
  // S_0 is the canonical M_0 ≅ (uM_0)_0: f ↦ U_0([f])∘e^{U_0}.
  Underlying u = underlying(a);
  const FinCat& c = *u.cat;
  for (int f = 0; f < c.nm(); ++f) {
    int A = c.dom[f], B = c.cod[f];
    int lhs = S.on_name(A, B, u.name[f]);
    int rhs = V.comp(U0->mo(M0->name_of(f)), U0->e);
    if (lhs != rhs) rep.fail("underlying-canonical-iso", c.mor[f]);
  }
  return R;
}

LawReport check_theta_normalization_identity(Ptr<SymMonClosedVCat> m) {
  LawReport rep;
  const VCat& a = *m->m;
  const Smcc& V = m->base();
  const int J = m->unit_obj;
  MonVFunctor U = canonical_normalization(m);
  int JJ = a.h(J, J);
  for (int x = 0; x < m->n(); ++x)
    for (int nm : V.C().hom(V.unit, a.h(J, x))) {
      int img = V.comp(V.unname(JJ, a.h(J, x), U.F.on_name(J, x, nm)), a.j(J));
      if (img != nm) rep.fail("theta-identity", a.obj[x] + ":" + V.C().mor[nm]);
    }
  return rep;
}

LawReport check_fundamental_lemma(Ptr<MonVFunctor> G, bool monoidal) {
  LawReport rep;
  const std::string w = G->name;
  try {
    Reconstruction RM = reconstruct_iso(G->src);
    Reconstruction RN = reconstruct_iso(G->dst);
    rep.merge(RM.report, "reconstruction-src/");
    rep.merge(RN.report, "reconstruction-dst/");
    if (!rep.ok()) return rep;
    auto M0 = underlying_smcc(*G->src);
    auto N0 = underlying_smcc(*G->dst);
    auto G0 = std::make_shared<const MonoidalFunctor>(underlying_monoidal(*G, M0, N0));
    auto UN0 = normalization_0(G->dst);
    MonoidalNatTrans th = theta_0(G);
    MonVFunctor leg1 = push_nat_family_mon(th, *autoenrich(M0));
    MonVFunctor leg2 = push_monvfunctor(*UN0, grave(G0));
    MonVFunctor cw = compose(RN.S_inv, compose(leg2, leg1));
    MonVFunctor ccw = compose(*G, RM.S_inv);
    if (cw.F.omap != ccw.F.omap || cw.F.hmap != ccw.F.hmap) rep.fail("fundamental-square", w);
    if (monoidal && (cw.e != ccw.e || cw.m != ccw.m)) rep.fail("monoidal-fundamental-square", w);
  } catch (const StructuralError& e) {
    rep.fail("pushforward-composition", w + ": " + e.what());
  }
  return rep;
}

LawReport check_recovery_triangle(Ptr<MonoidalFunctor> G) {
  LawReport rep;
  Comparison KG = comparison_KG(G);
  MonoidalFunctor Gg0 = underlying_monoidal(grave(G), KG.target, G->dst);
  MonoidalFunctor back = compose(Gg0, KG.K);
  if (!(back.F == G->F)) rep.fail("recovery-triangle", G->name);
  if (back.e != G->e || back.m != G->m) rep.fail("monoidal-recovery-triangle", G->name);
  return rep;
}

LawReport check_autoenrichment_2functor(const AutoenrichProbe& probe) {
  std::vector<std::function<LawReport()>> tasks;
  const auto& fs = probe.functors;
  const auto& cs = probe.cells;
  auto eq1 = [](const std::string& law, const std::string& w, const Groth1Cell& x, const Groth1Cell& y) {
    LawReport r;
    if (!(x == y)) r.fail(law, w);
    return r;
  };
  auto eq2 = [](const std::string& law, const std::string& w, const Groth2Cell& x, const Groth2Cell& y) {
    LawReport r;
    if (!(x == y)) r.fail(law, w);
    return r;
  };
  // the preservation laws are only meaningful on well-formed inputs
  LawReport inputs;
  for (const auto& G : fs) inputs.merge(check_monoidal_functor(*G), "functor " + G->name + "/");
  for (const auto& a : cs) inputs.merge(check_monoidal_nat(*a), "cell " + a->name + "/");
  if (!inputs.ok()) return inputs;
  std::vector<Ptr<Smcc>> bases;
  for (const auto& G : fs)
    for (const auto& v : {G->src, G->dst}) {
      bool seen = false;
      for (const auto& b : bases) seen = seen || same_smcc(*b, *v);
      if (!seen) bases.push_back(v);
    }
  for (const auto& v : bases)
    tasks.push_back([=] {
      auto id = std::make_shared<const MonoidalFunctor>(identity_monoidal(v));
      return eq1("identity", v->name, grave_cell(id), groth_identity(grave_obj(v)));
    });
  for (const auto& G : fs)
    for (const auto& H : fs)
      if (same_smcc(*G->dst, *H->src))
        tasks.push_back([=] {
          auto HG = std::make_shared<const MonoidalFunctor>(compose(*H, *G));
          return eq1("composition", H->name + "." + G->name, grave_cell(HG),
                     groth_compose(grave_cell(H), grave_cell(G)));
        });
  for (const auto& a : cs) {
    tasks.push_back([=] {
      LawReport r;
      r.merge(check_monvnat(grave_nat(a)), "grave-nat/");
      return r;
    });
    tasks.push_back([=] {
      auto id = std::make_shared<const MonoidalNatTrans>(identity_monoidal_nat(a->src));
      return eq2("identity-2-cell", a->src->name, grave_cell2(id), groth_identity2(grave_cell(a->src)));
    });
    for (const auto& b : cs)
      if (*a->dst == *b->src)
        tasks.push_back([=] {
          auto ba = std::make_shared<const MonoidalNatTrans>(vcomp(*b, *a));
          return eq2("vertical-composition", b->name + "." + a->name, grave_cell2(ba),
                     groth_vcomp(grave_cell2(b), grave_cell2(a)));
        });
    for (const auto& f : fs) {
      if (same_smcc(*f->dst, *a->src->src))
        tasks.push_back([=] {
          auto af = std::make_shared<const MonoidalNatTrans>(whisker_right(*a, f));
          return eq2("whisker-right", a->name + "*" + f->name, grave_cell2(af),
                     groth_whisker_right(grave_cell2(a), grave_cell(f)));
        });
      if (same_smcc(*f->src, *a->src->dst))
        tasks.push_back([=] {
          auto fa = std::make_shared<const MonoidalNatTrans>(whisker_left(f, *a));
          return eq2("whisker-left", f->name + "*" + a->name, grave_cell2(fa),
                     groth_whisker_left(grave_cell(f), grave_cell2(a)));
        });
    }
  }
  return merge_all(run_parallel(tasks));
}

}  // namespace basechange
