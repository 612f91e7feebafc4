#include "basechange/adjoint.hpp"

#include <functional>

#include "basechange/autoenrich.hpp"
#include "basechange/parallel.hpp"

namespace basechange {

namespace {

template <class T>
Ptr<T> share(T v) {
  return std::make_shared<const T>(std::move(v));
}

const std::string& obj_name(const Smcc& v, int x) { return v.C().obj[x]; }

// Replaces src/dst by table-equal categories so later pointer-sharing code
// (underlying categories, composites) sees the canonical instances.
MonVFunctor reseat(MonVFunctor S, Ptr<SymMonClosedVCat> src, Ptr<SymMonClosedVCat> dst) {
  if (!same_symmonclosed(*S.src, *src) || !same_symmonclosed(*S.dst, *dst))
    throw StructuralError("reseating " + S.name + ": categories differ as tables");
  S.src = src;
  S.dst = dst;
  S.F.src = src->m;
  S.F.dst = dst->m;
  return S;
}

void compare_components(LawReport& rep, const std::string& law, const std::vector<int>& got,
                        const std::vector<int>& want, const std::vector<std::string>& names) {
  if (got.size() != want.size()) {
    rep.fail(law, "component count");
    return;
  }
  for (std::size_t i = 0; i < got.size(); ++i)
    if (got[i] != want[i]) rep.fail(law, names[i]);
}

}  // namespace

LawReport check_adjunction(const OrdinaryAdjunction& a) {
  const MonoidalFunctor& F = *a.F;
  const MonoidalFunctor& G = *a.G;
  if (!same_smcc(*F.src, *G.dst) || !same_smcc(*F.dst, *G.src))
    throw StructuralError("adjunction " + a.name + ": F and G are not opposed");
  LawReport rep;
  rep.merge(check_monoidal_functor(F), "F/");
  rep.merge(check_monoidal_functor(G), "G/");
  rep.merge(check_monoidal_nat(*a.eta), "eta/");
  rep.merge(check_monoidal_nat(*a.eps), "eps/");
  if (!rep.ok()) return rep;
  const Smcc& V = *F.src;
  const Smcc& M = *F.dst;
  if (!(*a.eta->src == identity_monoidal(F.src)) || !(*a.eta->dst == compose(G, F)))
    rep.fail("unit-shape", a.eta->name);
  if (!(*a.eps->src == compose(F, G)) || !(*a.eps->dst == identity_monoidal(G.src)))
    rep.fail("counit-shape", a.eps->name);
  if (!rep.ok()) return rep;
  for (int x = 0; x < M.n(); ++x)
    if (V.comp(G.mo(a.eps->at(x)), a.eta->at(G.ob(x))) != V.id(G.ob(x)))
      rep.fail("triangle-right", obj_name(M, x));
  for (int v = 0; v < V.n(); ++v)
    if (M.comp(a.eps->at(F.ob(v)), F.mo(a.eta->at(v))) != M.id(F.ob(v)))
      rep.fail("triangle-left", obj_name(V, v));
  return rep;
}

LawReport check_adjunction(const EnrichedAdjunction& a) {
  const MonVFunctor& F = *a.F;
  const MonVFunctor& G = *a.G;
  if (!same_symmonclosed(*F.src, *G.dst) || !same_symmonclosed(*F.dst, *G.src))
    throw StructuralError("enriched adjunction " + a.name + ": F and G are not opposed");
  LawReport rep;
  rep.merge(check_monvfunctor(F), "F/");
  rep.merge(check_monvfunctor(G), "G/");
  rep.merge(check_monvnat(*a.eta), "eta/");
  rep.merge(check_monvnat(*a.eps), "eps/");
  if (!rep.ok()) return rep;
  if (!(*a.eta->src == identity_monvfunctor(F.src)) || !(*a.eta->dst == compose(G, F)))
    rep.fail("unit-shape", a.eta->name);
  if (!(*a.eps->src == compose(F, G)) || !(*a.eps->dst == identity_monvfunctor(G.src)))
    rep.fail("counit-shape", a.eps->name);
  if (!rep.ok()) return rep;
  MonVNatTrans right = vcomp(whisker_left(a.G, *a.eps), whisker_right(*a.eta, a.G));
  compare_components(rep, "triangle-right", right.comp, identity_monvnat(a.G).comp, G.src->m->obj);
  MonVNatTrans left = vcomp(whisker_right(*a.eps, a.F), whisker_left(a.F, *a.eta));
  compare_components(rep, "triangle-left", left.comp, identity_monvnat(a.F).comp, F.src->m->obj);
  return rep;
}

LawReport check_adjunction(const SliceAdjunction& a) {
  if (!same_smcc(*a.F.src.obj, *a.G.dst.obj) || !same_smcc(*a.F.dst.obj, *a.G.src.obj) ||
      !(*a.F.src.map == *a.G.dst.map) || !(*a.F.dst.map == *a.G.src.map))
    throw StructuralError("slice adjunction " + a.name + ": F and G are not opposed");
  LawReport rep;
  rep.merge(check_slice_1cell(a.F), "F/");
  rep.merge(check_slice_1cell(a.G), "G/");
  rep.merge(check_slice_2cell(a.eta), "eta/");
  rep.merge(check_slice_2cell(a.eps), "eps/");
  if (!rep.ok()) return rep;
  auto same1 = [](const Slice1& x, const Slice1& y) { return *x.s == *y.s && *x.sigma == *y.sigma; };
  if (!same1(a.eta.src, slice_identity(a.F.src)) || !same1(a.eta.dst, slice_compose(a.G, a.F)))
    rep.fail("unit-shape", a.eta.alpha->name);
  if (!same1(a.eps.src, slice_compose(a.F, a.G)) || !same1(a.eps.dst, slice_identity(a.G.src)))
    rep.fail("counit-shape", a.eps.alpha->name);
  if (!rep.ok()) return rep;
  MonoidalNatTrans right = vcomp(whisker_left(a.G.s, *a.eps.alpha), whisker_right(*a.eta.alpha, a.G.s));
  compare_components(rep, "triangle-right", right.comp, identity_monoidal_nat(a.G.s).comp,
                     a.G.s->src->C().obj);
  MonoidalNatTrans left = vcomp(whisker_right(*a.eps.alpha, a.F.s), whisker_left(a.F.s, *a.eta.alpha));
  compare_components(rep, "triangle-left", left.comp, identity_monoidal_nat(a.F.s).comp,
                     a.F.s->src->C().obj);
  return rep;
}

OrdinaryAdjunction identity_adjunction(Ptr<Smcc> v) {
  auto id = share(identity_monoidal(v));
  auto one = share(identity_monoidal_nat(id));
  return {"1_" + v->name, id, id, one, one};
}

SliceAdjunction laxslice_adjunction(const OrdinaryAdjunction& a) {
  Ptr<Smcc> V = a.F->src;
  Ptr<Smcc> M = a.F->dst;
  SliceObj base{V, share(identity_monoidal(V))};
  SliceObj over{M, a.G};
  Slice1 F{base, over, a.F, a.eta};
  MonoidalNatTrans g1 = identity_monoidal_nat(a.G);
  g1.dst = share(compose(*base.map, *a.G));
  Slice1 G{over, base, a.G, share(std::move(g1))};
  Slice2 eta{slice_identity(base), slice_compose(G, F), a.eta};
  Slice2 eps{slice_compose(F, G), slice_identity(over), a.eps};
  return {a.name + "/slice", F, G, eta, eps};
}

MonVFunctor transpose_1cell(const OrdinaryAdjunction& a, Ptr<SymMonClosedVCat> X, const MonVFunctor& H) {
  MonVFunctor out = compose(push_monvfunctor(*a.G, H), push_nat_family_mon(*a.eta, *X));
  out.name = "transpose(" + H.name + ")";
  return reseat(std::move(out), X, push_monvcat(*a.G, *H.dst));
}

MonVNatTrans transpose_2cell(const OrdinaryAdjunction& a, const SymMonClosedVCat& X, const MonVNatTrans& t) {
  auto etaX = share(push_nat_family_mon(*a.eta, X));
  MonVNatTrans out = whisker_right(push_monvnat(*a.G, t), etaX);
  out.name = "transpose(" + t.name + ")";
  return out;
}

MonVFunctor untranspose_1cell(const OrdinaryAdjunction& a, const SymMonClosedVCat& Y, const MonVFunctor& K) {
  MonVFunctor out = compose(push_nat_family_mon(*a.eps, Y), push_monvfunctor(*a.F, K));
  out.name = "untranspose(" + K.name + ")";
  return out;
}

MonVNatTrans untranspose_2cell(const OrdinaryAdjunction& a, const SymMonClosedVCat& Y, const MonVNatTrans& t) {
  auto epsY = share(push_nat_family_mon(*a.eps, Y));
  MonVNatTrans out = whisker_left(epsY, push_monvnat(*a.F, t));
  out.name = "untranspose(" + t.name + ")";
  return out;
}

std::vector<int> reconstruct_left_homs(const EnrichedAdjunction& a) {
  const SymMonClosedVCat& uV = *a.F->src;
  const VCat& hv = *uV.m;
  const MonVFunctor& G = *a.G;
  const Smcc& V = uV.base();
  const int n = uV.n();
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    for (int y = 0; y < n; ++y) {
      const int Fv = a.F->ob(v), Fy = a.F->ob(y);
      const int GFv = G.ob(Fv), GFy = G.ob(Fy);
      int pre = precompose(hv, a.eta->comp[v], v, GFv, GFy);
      int phi = V.comp(pre, G.F.hm(Fv, Fy));
      int phi_inv = V.inv(phi);
      if (phi_inv < 0) {
        out.push_back(-1);
        continue;
      }
      int post = postcompose(hv, a.eta->comp[y], y, GFy, v);
      out.push_back(V.comp(phi_inv, post));
    }
  return out;
}

EnrichedAdjunctionResult enrich_adjunction(const OrdinaryAdjunction& a) {
  LawReport input = check_adjunction(a);
  if (!input.ok()) throw StructuralError("enrich_adjunction " + a.name + ": input is not an adjunction: " + input.summary());
  Ptr<Smcc> Vp = a.F->src;
  Ptr<Smcc> Mp = a.F->dst;
  const Smcc& V = *Vp;
  const Smcc& M = *Mp;
  if (!a.G->symmetric) throw StructuralError("enrich_adjunction " + a.name + ": G is not symmetric");
  if (!is_normal(a.G)) {
    std::string witness;
    for (int x : normality_failures(*a.G)) witness += (witness.empty() ? "" : ",") + obj_name(M, x);
    throw StructuralError("enrich_adjunction " + a.name + ": G is not normal, theta^G is not invertible at " +
                          witness);
  }

  EnrichedAdjunctionResult res;
  auto uV = autoenrich(Vp);
  auto uM = autoenrich(Mp);
  auto Gg = share(grave(a.G));  // G̀ : G_*uM → uV
  auto Fg = share(grave(a.F));  // F̀ : F_*uV → uM
  auto pushed = Gg->src;

  MonVFunctor Fa = reseat(transpose_1cell(a, uV, *Fg), uV, pushed);
  Fa.name = "F'";
  auto Fac = share(std::move(Fa));

  MonVNatTrans eta_a;
  eta_a.name = "eta'";
  eta_a.src = share(identity_monvfunctor(uV));
  eta_a.dst = share(compose(*Gg, *Fac));
  for (int v = 0; v < V.n(); ++v) eta_a.comp.push_back(V.name_of(a.eta->at(v)));

  MonVNatTrans eps_a;
  eps_a.name = "eps'";
  eps_a.src = share(compose(*Fac, *Gg));
  eps_a.dst = share(identity_monvfunctor(pushed));
  for (int x = 0; x < M.n(); ++x) eps_a.comp.push_back(V.comp(a.G->mo(M.name_of(a.eps->at(x))), a.G->e));

  res.adj = {a.name + "/enriched", Fac, Gg, share(std::move(eta_a)), share(std::move(eps_a))};
  const EnrichedAdjunction& E = res.adj;
  res.K = comparison_KG(a.G);

  std::vector<std::function<LawReport()>> tasks;
  tasks.push_back([&] { return check_adjunction(E); });
  tasks.push_back([&] {
    LawReport rep;
    if (!is_isomorphism(res.K.K)) rep.fail("comparison-invertible", a.G->name);
    return rep;
  });
  tasks.push_back([&] {
    LawReport rep;
    auto eg = share(grave_nat(a.eta));
    compare_components(rep, "unit-components", E.eta->comp, eg->comp, V.C().obj);
    if (!(*eg->src == *E.eta->src)) rep.fail("unit-domain", a.eta->name);
    if (!(*eg->dst == *E.eta->dst)) rep.fail("unit-codomain", a.eta->name);
    return rep;
  });
  tasks.push_back([&] {
    LawReport rep;
    auto eg = share(grave_nat(a.eps));
    if (!(transpose_2cell(a, *pushed, *eg) == *E.eps)) rep.fail("counit-transpose", a.eps->name);
    if (!(untranspose_2cell(a, *uM, *E.eps) == *eg)) rep.fail("counit-untranspose", a.eps->name);
    if (!(untranspose_1cell(a, *uM, *E.F) == *Fg)) rep.fail("left-adjoint-untranspose", a.F->name);
    return rep;
  });
  tasks.push_back([&] {
    LawReport rep;
    std::vector<int> rebuilt = reconstruct_left_homs(E);
    std::vector<std::string> where;
    for (int v = 0; v < V.n(); ++v)
      for (int y = 0; y < V.n(); ++y) where.push_back(pair_id(obj_name(V, v), obj_name(V, y)));
    compare_components(rep, "mate-reconstruction", rebuilt, E.F->F.hmap, where);
    for (int v = 0; v < V.n(); ++v)
      if (E.F->ob(v) != a.F->ob(v)) rep.fail("mate-reconstruction-objects", obj_name(V, v));
    return rep;
  });
  tasks.push_back([&] {
    LawReport rep;
    EnrichedAdjunction route = enr_v_route(a);
    if (!(*route.F == *E.F)) rep.fail("enr-v-route-left", a.F->name);
    if (!(*route.G == *E.G)) rep.fail("enr-v-route-right", a.G->name);
    if (!(*route.eta == *E.eta)) rep.fail("enr-v-route-unit", a.eta->name);
    if (!(*route.eps == *E.eps)) rep.fail("enr-v-route-counit", a.eps->name);
    return rep;
  });
  res.report = merge_all(run_parallel(tasks));
  if (!res.report.ok()) return res;

  // Identification along K^G: everything on (G_*uM)_0 is carried back to M.
  try {
    Ptr<Smcc> T = res.K.target;
    auto K = share(res.K.K);
    auto Kinv = share(inverse_isomorphism(res.K.K));
    auto F0 = share(underlying_monoidal(*E.F, Vp, T));
    auto G0 = share(underlying_monoidal(*E.G, T, Vp));
    auto GF0 = share(underlying_monoidal(*E.eta->dst, Vp, Vp));
    auto FG0 = share(underlying_monoidal(*E.eps->src, T, T));
    MonoidalNatTrans eta0 = underlying_monoidal_nat(*E.eta, share(identity_monoidal(Vp)), GF0);
    MonoidalNatTrans eps0 = underlying_monoidal_nat(*E.eps, FG0, share(identity_monoidal(T)));

    auto Fr = share(compose(*Kinv, *F0));
    auto Gr = share(compose(*G0, *K));
    MonoidalNatTrans etar = eta0;
    etar.dst = share(compose(*Gr, *Fr));
    MonoidalNatTrans epsr = whisker_right(whisker_left(Kinv, eps0), K);
    epsr.src = share(compose(*Fr, *Gr));
    epsr.dst = share(identity_monoidal(Mp));
    res.identified = {a.name + "/identified", Fr, Gr, share(std::move(etar)), share(std::move(epsr))};

    for (int x = 0; x < M.n(); ++x)
      res.renaming_log.push_back("object " + obj_name(M, x) + " <- " + obj_name(*T, Kinv->ob(x)));
    for (int f = 0; f < M.nm(); ++f)
      res.renaming_log.push_back("morphism " + M.C().mor[f] + " <- " + T->C().mor[K->mo(f)]);

    const OrdinaryAdjunction& I = res.identified;
    if (!(*I.F == *a.F)) res.report.fail("identified-left-adjoint", a.F->name);
    if (!(*I.G == *a.G)) res.report.fail("identified-right-adjoint", a.G->name);
    compare_components(res.report, "identified-unit", I.eta->comp, a.eta->comp, V.C().obj);
    compare_components(res.report, "identified-counit", I.eps->comp, a.eps->comp, M.C().obj);
    res.report.merge(check_adjunction(I), "identified/");
  } catch (const StructuralError& e) {
    res.report.broken(std::string("identification along K^G: ") + e.what());
  }
  return res;
}

EnrichedAdjunction enr_v_route(const OrdinaryAdjunction& a) {
  SliceAdjunction s = laxslice_adjunction(a);
  FibreSlice1 F = enr_v(s.F), G = enr_v(s.G);
  FibreSlice2 eta = enr_v(s.eta), eps = enr_v(s.eps);
  return {a.name + "/enr-v", F.s, G.s, eta.alpha, eps.alpha};
}

}  // namespace basechange
