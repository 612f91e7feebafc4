#include <doctest.h>

#include "support.hpp"

using namespace basechange;

namespace {

// Galois-connection oracle for thin adjunctions: F v ≤ x iff v ≤ G x.
bool brute_galois(const MonoidalFunctor& F, const MonoidalFunctor& G) {
  const Smcc& V = *F.src;
  const Smcc& M = *F.dst;
  for (int v = 0; v < V.n(); ++v)
    for (int x = 0; x < M.n(); ++x)
      if (M.C().hom(F.ob(v), x).empty() != V.C().hom(v, G.ob(x)).empty()) return false;
  return true;
}

}  // namespace

TEST_CASE("r -| q between B2 and G3") {
  const OrdinaryAdjunction& a = fx::adjunction("r_q");
  CHECK(brute_galois(*a.F, *a.G));
  CHECK(check_adjunction(a).ok());
  // rq(1/2) = 0 ≤ 1/2
  CHECK(a.F->ob(a.G->ob(1)) == 0);
  CHECK(is_normal(a.G));
}

TEST_CASE("identity adjunctions") {
  for (const auto& v : fx::bundled().bases) {
    INFO(v->name);
    OrdinaryAdjunction a = identity_adjunction(v);
    CHECK(check_adjunction(a).ok());
  }
}

TEST_CASE("counit corrupted at 1/2 is named") {
  OrdinaryAdjunction a = fx::adjunction("r_q");
  MonoidalNatTrans eps = *a.eps;
  eps.comp[1] = fx::G3()->id(0);  // ε_{1/2} : 0 → 1/2 replaced by 1_0
  a.eps = fx::share(eps);
  LawReport r = check_adjunction(a);
  CHECK(fx::has_at(r, "eps/component-shape", "1/2"));
  CHECK_THROWS_AS(enrich_adjunction(a), StructuralError);
}

TEST_CASE("non-identity unit on C3 is named") {
  // η = ε = g1 would also break the triangles ((εF)(Fη) = g2), but the cells
  // already fail monoidality at the unit, where every component must be e
  OrdinaryAdjunction a = identity_adjunction(fx::C3());
  int g1 = fx::C3()->C().m("g1");
  MonoidalNatTrans eta = *a.eta, eps = *a.eps;
  eta.comp = {g1};
  eps.comp = {g1};
  a.eta = fx::share(eta);
  a.eps = fx::share(eps);
  LawReport r = check_adjunction(a);
  CHECK_FALSE(r.ok());
  CHECK(fx::has_law_prefix(r, "eta/monoidal"));
}

TEST_CASE("opposed shapes are required") {
  OrdinaryAdjunction a = fx::adjunction("r_q");
  a.G = fx::fn("iota");
  CHECK_THROWS_AS(check_adjunction(a), StructuralError);
}

TEST_CASE("slice adjunctions") {
  SliceAdjunction s = laxslice_adjunction(fx::adjunction("r_q"));
  CHECK(check_adjunction(s).ok());
  CHECK(check_slice_2cell(s.eta).ok());
  CHECK(check_slice_2cell(s.eps).ok());
  SliceAdjunction i = laxslice_adjunction(identity_adjunction(fx::B2()));
  CHECK(check_adjunction(i).ok());
  CHECK(i.F.s->F == identity_monoidal(fx::B2()).F);
}

TEST_CASE("transposition under F_* -| G_* round-trips") {
  const OrdinaryAdjunction& a = fx::adjunction("r_q");
  auto X = fx::u(fx::B2());
  auto Y = pushed_fibre(a.F, X);
  auto H = identity_monvfunctor(Y);
  MonVFunctor K = transpose_1cell(a, X, H);
  CHECK(check_monvfunctor(K).ok());
  MonVFunctor H2 = untranspose_1cell(a, *Y, K);
  CHECK(H2.F.omap == H.F.omap);
  CHECK(H2.F.hmap == H.F.hmap);
  CHECK(H2.e == H.e);
  CHECK(H2.m == H.m);
}

TEST_CASE("enriching r -| q") {
  EnrichedAdjunctionResult r = enrich_adjunction(fx::adjunction("r_q"));
  INFO(r.report.summary());
  CHECK(r.report.ok());
  CHECK(check_adjunction(r.adj).ok());
  CHECK(is_isomorphism(r.K.K));
  const OrdinaryAdjunction& a = fx::adjunction("r_q");
  CHECK(*r.identified.F == *a.F);
  CHECK(*r.identified.G == *a.G);
  CHECK(r.identified.eta->comp == a.eta->comp);
  CHECK(r.identified.eps->comp == a.eps->comp);
  // unit components are the names of the components of η
  for (int v = 0; v < 2; ++v) CHECK(r.adj.eta->comp[v] == fx::B2()->name_of(a.eta->at(v)));
  CHECK(*r.adj.G == grave(a.G));
  CHECK(reconstruct_left_homs(r.adj) == r.adj.F->F.hmap);
  CHECK_FALSE(r.renaming_log.empty());
  EnrichedAdjunction route = enr_v_route(a);
  CHECK(*route.F == *r.adj.F);
  CHECK(*route.eps == *r.adj.eps);
}

TEST_CASE("enriching the identity adjunction gives the identity") {
  EnrichedAdjunctionResult r = enrich_adjunction(identity_adjunction(fx::B2()));
  CHECK(r.report.ok());
  auto uB = fx::u(fx::B2());
  CHECK(r.adj.F->F.omap == std::vector<int>{0, 1});
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) CHECK(fx::B2()->C().is_identity(r.adj.F->F.hm(A, B)));
  CHECK(r.adj.eta->comp == identity_monvnat(fx::share(identity_monvfunctor(uB))).comp);
}
