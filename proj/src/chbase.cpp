#include "basechange/chbase.hpp"

#include "basechange/autoenrich.hpp"

namespace basechange {

namespace {

int push_name(const MonoidalFunctor& G, int nm) { return G.dst->comp(G.mo(nm), G.e); }

void require_base(const MonoidalFunctor& G, const Smcc& v, const std::string& what) {
  if (!same_smcc(*G.src, v))
    throw StructuralError("cannot push " + what + " along " + G.name + ": base is not its domain");
}

}  // namespace

VCat push_vcat(const MonoidalFunctor& G, const VCat& a) {
  require_base(G, *a.base, a.name);
  const Smcc& W = *G.dst;
  const int n = a.n();
  VCat t;
  t.name = G.name + "_*" + a.name;
  t.base = G.dst;
  t.obj = a.obj;
  for (int x : a.hom) t.hom.push_back(G.ob(x));
  for (int A = 0; A < n; ++A)
    for (int B = 0; B < n; ++B)
      for (int C = 0; C < n; ++C)
        t.comp.push_back(W.comp(G.mo(a.c(A, B, C)), G.M(a.h(A, B), a.h(B, C))));
  for (int A = 0; A < n; ++A) t.unit.push_back(push_name(G, a.j(A)));
  return t;
}

VFunctor push_vfunctor(const MonoidalFunctor& G, const VFunctor& F) {
  VFunctor P;
  P.src = std::make_shared<const VCat>(push_vcat(G, *F.src));
  P.dst = std::make_shared<const VCat>(push_vcat(G, *F.dst));
  P.omap = F.omap;
  for (int f : F.hmap) P.hmap.push_back(G.mo(f));
  return P;
}

VNatTrans push_vnat(const MonoidalFunctor& G, const VNatTrans& t) {
  VNatTrans p{push_vfunctor(G, t.src), push_vfunctor(G, t.dst), {}};
  for (int c : t.comp) p.comp.push_back(push_name(G, c));
  return p;
}

Ptr<SymMonClosedVCat> push_monvcat(const MonoidalFunctor& G, const SymMonClosedVCat& m) {
  if (!G.symmetric)
    throw StructuralError("pushing " + m.name + " needs a symmetric functor; " + G.name + " is not");
  const Smcc& W = *G.dst;
  const VCat& a = *m.m;
  const int n = m.n();
  auto p = std::make_shared<SymMonClosedVCat>();
  p->name = G.name + "_*" + m.name;
  p->m = std::make_shared<const VCat>(push_vcat(G, a));
  p->mm = std::make_shared<const VCat>(tensor_vcat(*p->m, *p->m));
  p->tensor.src = p->mm;
  p->tensor.dst = p->m;
  p->tensor.omap = m.tensor.omap;
  for (int P = 0; P < n * n; ++P)
    for (int Q = 0; Q < n * n; ++Q)
      p->tensor.hmap.push_back(W.comp(G.mo(m.tensor.hm(P, Q)),
                                      G.M(a.h(P / n, Q / n), a.h(P % n, Q % n))));
  p->unit_obj = m.unit_obj;
  for (int c : m.a) p->a.push_back(push_name(G, c));
  for (int c : m.l) p->l.push_back(push_name(G, c));
  for (int c : m.r) p->r.push_back(push_name(G, c));
  for (int c : m.s) p->s.push_back(push_name(G, c));
  for (const Closure& cl : m.closure) {
    Closure q;
    q.rmap = cl.rmap;
    for (int f : cl.rhom) q.rhom.push_back(G.mo(f));
    for (int c : cl.unit) q.unit.push_back(push_name(G, c));
    for (int c : cl.counit) q.counit.push_back(push_name(G, c));
    p->closure.push_back(std::move(q));
  }
  return p;
}

MonVFunctor push_monvfunctor(const MonoidalFunctor& G, const MonVFunctor& S) {
  MonVFunctor P;
  P.name = G.name + "_*" + S.name;
  P.src = push_monvcat(G, *S.src);
  P.dst = push_monvcat(G, *S.dst);
  P.F.src = P.src->m;
  P.F.dst = P.dst->m;
  P.F.omap = S.F.omap;
  for (int f : S.F.hmap) P.F.hmap.push_back(G.mo(f));
  P.e = push_name(G, S.e);
  for (int c : S.m) P.m.push_back(push_name(G, c));
  P.symmetric = S.symmetric;
  return P;
}

MonVNatTrans push_monvnat(const MonoidalFunctor& G, const MonVNatTrans& t) {
  MonVNatTrans p;
  p.name = G.name + "_*" + t.name;
  p.src = std::make_shared<const MonVFunctor>(push_monvfunctor(G, *t.src));
  p.dst = std::make_shared<const MonVFunctor>(push_monvfunctor(G, *t.dst));
  for (int c : t.comp) p.comp.push_back(push_name(G, c));
  return p;
}

VFunctor push_nat_family(const MonoidalNatTrans& phi, const VCat& a) {
  VFunctor P;
  P.src = std::make_shared<const VCat>(push_vcat(*phi.src, a));
  P.dst = std::make_shared<const VCat>(push_vcat(*phi.dst, a));
  for (int A = 0; A < a.n(); ++A) P.omap.push_back(A);
  for (int x : a.hom) P.hmap.push_back(phi.at(x));
  return P;
}

MonVFunctor push_nat_family_mon(const MonoidalNatTrans& phi, const SymMonClosedVCat& m) {
  MonVFunctor S;
  S.name = phi.name + "_*";
  S.src = push_monvcat(*phi.src, m);
  S.dst = push_monvcat(*phi.dst, m);
  S.F.src = S.src->m;
  S.F.dst = S.dst->m;
  for (int A = 0; A < m.n(); ++A) S.F.omap.push_back(A);
  for (int x : m.m->hom) S.F.hmap.push_back(phi.at(x));
  const VCat& b = *S.dst->m;
  S.e = b.j(m.unit_obj);
  for (int x = 0; x < m.n(); ++x)
    for (int y = 0; y < m.n(); ++y) S.m.push_back(b.j(m.ten(x, y)));
  S.symmetric = phi.src->symmetric && phi.dst->symmetric;
  return S;
}

LawReport check_strict_symmetric(const MonVFunctor& S) {
  LawReport rep = check_monvfunctor(S);
  if (!rep.ok()) return rep;
  const SymMonClosedVCat& M = *S.src;
  const SymMonClosedVCat& N = *S.dst;
  if (!is_strict(S)) rep.fail("strict-structure", S.name);
  if (!rep.ok()) return rep;
  VFunctor lhs = compose(S.F, M.tensor);
  VFunctor rhs = compose(N.tensor, tensor_vfunctor(S.F, S.F, M.mm, N.mm));
  if (!(lhs == rhs)) rep.fail("strict-tensor", S.name);
  const int n = M.n();
  const int I = M.unit_obj;
  for (int x = 0; x < n; ++x) {
    if (S.F.on_name(M.ten(I, x), x, M.L(x)) != N.L(S.ob(x))) rep.fail("strict-left-unitor", M.m->obj[x]);
    if (S.F.on_name(M.ten(x, I), x, M.R(x)) != N.R(S.ob(x))) rep.fail("strict-right-unitor", M.m->obj[x]);
    for (int y = 0; y < n; ++y) {
      const std::string w = "(" + M.m->obj[x] + "," + M.m->obj[y] + ")";
      if (S.F.on_name(M.ten(x, y), M.ten(y, x), M.S(x, y)) != N.S(S.ob(x), S.ob(y)))
        rep.fail("strict-symmetry", w);
      for (int z = 0; z < n; ++z)
        if (S.F.on_name(M.ten(M.ten(x, y), z), M.ten(x, M.ten(y, z)), M.A(x, y, z)) !=
            N.A(S.ob(x), S.ob(y), S.ob(z)))
          rep.fail("strict-associator", w + M.m->obj[z]);
    }
  }
  return rep;
}

// ---- normalizations ----

MonVFunctor canonical_normalization(Ptr<SymMonClosedVCat> m) {
  const VCat& a = *m->m;
  const Smcc& V = *a.base;
  const int n = m->n();
  const int I = m->unit_obj;
  MonVFunctor U;
  U.name = "U^" + m->name;
  U.src = m;
  U.dst = autoenrich(a.base);
  U.F.src = m->m;
  U.F.dst = U.dst->m;
  for (int x = 0; x < n; ++x) U.F.omap.push_back(a.h(I, x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) U.F.hmap.push_back(V.transpose(a.h(I, x), a.h(x, y), a.c(I, x, y)));
  U.e = V.name_of(a.j(I));
  int II = m->ten(I, I);
  int linv = name_inverse(a, II, I, m->L(I));
  if (linv < 0) throw StructuralError("left unitor at the unit of " + m->name + " is not invertible");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = m->ten(x, y);
      int f = V.comp(precompose(a, linv, I, II, xy), m->tensor.hm(I * n + I, x * n + y));
      U.m.push_back(V.name_of(f));
    }
  return U;
}

std::vector<int> normalization_via_hom_functor(const SymMonClosedVCat& m) {
  const VCat& a = *m.m;
  const Smcc& V = *a.base;
  const int n = m.n();
  const int I = m.unit_obj;
  VFunctor H = hom_vfunctor(m.m);
  std::vector<int> out;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int X = a.h(x, y);
      out.push_back(V.path({V.inv(V.L(X)), V.tenm(a.j(I), V.id(X)), H.hm(I * n + x, I * n + y)}));
    }
  return out;
}

Ptr<MonoidalFunctor> normalization_0(Ptr<SymMonClosedVCat> m) {
  MonVFunctor U = canonical_normalization(m);
  return std::make_shared<const MonoidalFunctor>(
      underlying_monoidal(U, underlying_smcc(*m), m->m->base));
}

std::vector<int> theta_components(const MonVFunctor& S) {
  const SymMonClosedVCat& M = *S.src;
  const SymMonClosedVCat& N = *S.dst;
  const Smcc& V = M.base();
  const int I = M.unit_obj, J = N.unit_obj;
  std::vector<int> out;
  for (int x = 0; x < M.n(); ++x)
    out.push_back(V.comp(precompose(*N.m, S.e, J, S.ob(I), S.ob(x)), S.F.hm(I, x)));
  return out;
}

MonVNatTrans theta(Ptr<MonVFunctor> S) {
  const Smcc& V = S->src->base();
  MonVNatTrans t;
  t.name = "theta^" + S->name;
  t.src = std::make_shared<const MonVFunctor>(canonical_normalization(S->src));
  t.dst = std::make_shared<const MonVFunctor>(compose(canonical_normalization(S->dst), *S));
  for (int f : theta_components(*S)) t.comp.push_back(V.name_of(f));
  return t;
}

MonoidalNatTrans theta_0(Ptr<MonVFunctor> S) {
  auto M0 = underlying_smcc(*S->src);
  auto N0 = underlying_smcc(*S->dst);
  auto S0 = underlying_monoidal(*S, M0, N0);
  MonoidalNatTrans t;
  t.name = "theta^" + S->name + "_0";
  t.src = normalization_0(S->src);
  t.dst = std::make_shared<const MonoidalFunctor>(compose(*normalization_0(S->dst), S0));
  t.comp = theta_components(*S);
  return t;
}

std::vector<int> xi_components(const Smcc& v) {
  std::vector<int> out;
  for (int X = 0; X < v.n(); ++X) out.push_back(v.transpose(v.unit, X, v.L(X)));
  return out;
}

MonVNatTrans unit_normalization_iso(Ptr<Smcc> v) {
  auto uV = autoenrich(v);
  MonVNatTrans t;
  t.name = "xi_" + v->name;
  t.src = std::make_shared<const MonVFunctor>(identity_monvfunctor(uV));
  t.dst = std::make_shared<const MonVFunctor>(canonical_normalization(uV));
  for (int f : xi_components(*v)) t.comp.push_back(v->name_of(f));
  return t;
}

MonVNatTrans kappa(Ptr<MonVFunctor> G) {
  const Smcc& V = G->src->base();
  auto uV = autoenrich(G->src->m->base);
  if (!same_symmonclosed(*G->dst, *uV))
    throw StructuralError("comparison for " + G->name + " needs a functor into the autoenrichment");
  auto xi = xi_components(V);
  auto th = theta_components(*G);
  MonVNatTrans t;
  t.name = "kappa^" + G->name;
  t.src = std::make_shared<const MonVFunctor>(canonical_normalization(G->src));
  t.dst = G;
  for (int x = 0; x < G->src->n(); ++x) t.comp.push_back(V.name_of(V.comp(V.inv(xi[G->ob(x)]), th[x])));
  return t;
}

std::vector<MonVNatTrans> enumerate_monoidal_vnats(Ptr<MonVFunctor> S, Ptr<MonVFunctor> T) {
  const SymMonClosedVCat& M = *S->src;
  const VCat& b = *S->dst->m;
  const Smcc& V = *b.base;
  const int n = M.n();
  std::vector<const std::vector<int>*> cand;
  std::size_t total = 1;
  for (int x = 0; x < n; ++x) {
    cand.push_back(&V.C().hom(V.unit, b.h(S->ob(x), T->ob(x))));
    total *= cand.back()->size();
    if (total > max_candidates()) throw SizeGuardError("size guard: too many candidate transformations");
  }
  std::vector<MonVNatTrans> out;
  if (total == 0) return out;
  std::vector<std::size_t> ix(n, 0);
  for (std::size_t k = 0; k < total; ++k) {
    MonVNatTrans t;
    t.name = S->name + "=>" + T->name + "#" + std::to_string(k);
    t.src = S;
    t.dst = T;
    for (int x = 0; x < n; ++x) t.comp.push_back((*cand[x])[ix[x]]);
    if (check_monvnat(t).ok()) out.push_back(std::move(t));
    for (int x = n - 1; x >= 0; --x) {
      if (++ix[x] < cand[x]->size()) break;
      ix[x] = 0;
    }
  }
  return out;
}

LawReport check_normalization_unique(Ptr<MonVFunctor> G) {
  LawReport rep;
  rep.merge(check_monvfunctor(*G), "target/");
  if (!rep.ok()) return rep;
  auto U = std::make_shared<const MonVFunctor>(canonical_normalization(G->src));
  auto all = enumerate_monoidal_vnats(U, G);
  if (all.size() != 1) {
    rep.fail("normalization-unique", G->name + " admits " + std::to_string(all.size()));
    return rep;
  }
  if (!(all[0].comp == kappa(G).comp)) rep.fail("normalization-is-kappa", G->name);
  return rep;
}

bool is_normal(const MonVFunctor& S) {
  const FinCat& v = S.src->base().C();
  for (int f : theta_components(S))
    if (v.inverse(f) < 0) return false;
  return true;
}

std::vector<int> normality_failures(const MonoidalFunctor& G) {
  const Smcc& V = *G.src;
  const Smcc& W = *G.dst;
  std::vector<int> bad;
  for (int x = 0; x < V.n(); ++x) {
    const auto& from = V.C().hom(V.unit, x);
    const auto& to = W.C().hom(W.unit, G.ob(x));
    bool ok = from.size() == to.size();
    std::vector<char> hit(W.nm(), 0);
    for (int f : from) {
      int g = W.comp(G.mo(f), G.e);
      if (hit[g]) ok = false;
      hit[g] = 1;
    }
    if (!ok) bad.push_back(x);
  }
  return bad;
}

bool is_normal_set(const MonoidalFunctor& G) { return normality_failures(G).empty(); }

bool is_normal(Ptr<MonoidalFunctor> G) { return is_normal_set(*G); }

Comparison comparison_KG(Ptr<MonoidalFunctor> G) {
  const Smcc& V = *G->src;
  const Smcc& W = *G->dst;
  auto pushed = push_monvcat(*G, *autoenrich(G->src));
  Underlying u = underlying(*pushed->m);
  Comparison c;
  c.target = underlying_smcc(*pushed);
  MonoidalFunctor& K = c.K;
  K.name = "K^" + G->name;
  K.src = G->src;
  K.dst = c.target;
  K.F.src = V.cat;
  K.F.dst = c.target->cat;
  for (int x = 0; x < V.n(); ++x) K.F.omap.push_back(x);
  for (int f = 0; f < V.nm(); ++f)
    K.F.mmap.push_back(u.of(V.dom(f), V.cod(f), W.comp(G->mo(V.name_of(f)), G->e)));
  K.e = c.target->id(c.target->unit);
  for (int x = 0; x < V.n(); ++x)
    for (int y = 0; y < V.n(); ++y) K.m.push_back(c.target->id(V.ten(x, y)));
  K.symmetric = true;
  return c;
}

bool is_isomorphism(const MonoidalFunctor& K) {
  const FinCat& a = *K.F.src;
  const FinCat& b = *K.F.dst;
  if (a.no() != b.no() || a.nm() != b.nm()) return false;
  std::vector<char> ho(b.no(), 0), hm(b.nm(), 0);
  for (int x : K.F.omap) {
    if (ho[x]) return false;
    ho[x] = 1;
  }
  for (int f : K.F.mmap) {
    if (hm[f]) return false;
    hm[f] = 1;
  }
  return true;
}

MonoidalFunctor inverse_isomorphism(const MonoidalFunctor& K) {
  if (!is_isomorphism(K)) throw StructuralError(K.name + " is not invertible");
  const FinCat& b = *K.F.dst;
  MonoidalFunctor L;
  L.name = K.name + "^-1";
  L.src = K.dst;
  L.dst = K.src;
  L.F.src = K.F.dst;
  L.F.dst = K.F.src;
  L.F.omap.assign(b.no(), -1);
  L.F.mmap.assign(b.nm(), -1);
  for (std::size_t x = 0; x < K.F.omap.size(); ++x) L.F.omap[K.F.omap[x]] = static_cast<int>(x);
  for (std::size_t f = 0; f < K.F.mmap.size(); ++f) L.F.mmap[K.F.mmap[f]] = static_cast<int>(f);
  const Smcc& T = *K.dst;
  L.e = L.mo(T.inv(K.e));
  const int n = b.no();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) L.m.push_back(L.mo(T.inv(K.M(L.ob(x), L.ob(y)))));
  L.symmetric = K.symmetric;
  return L;
}

}  // namespace basechange
