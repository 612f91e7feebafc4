#include <doctest.h>

#include "support.hpp"

using namespace basechange;

namespace {

// Brute-force ordinary normality: |V(I,x)| = |W(J,Gx)| and f ↦ G(f)∘e hits
// every element.
bool brute_normal(const MonoidalFunctor& G) {
  const Smcc& V = *G.src;
  const Smcc& W = *G.dst;
  for (int x = 0; x < V.n(); ++x) {
    const auto& src = V.C().hom(V.unit, x);
    const auto& dst = W.C().hom(W.unit, G.ob(x));
    std::vector<int> hit;
    for (int f : src) hit.push_back(W.comp(G.mo(f), G.e));
    std::sort(hit.begin(), hit.end());
    std::vector<int> all = dst;
    std::sort(all.begin(), all.end());
    if (hit != all) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("pushing uG3 along q gives the order of G3") {
  fx::QOracle g(quantale_G3());
  auto u = self_enriched(fx::G3());
  VCat p = push_vcat(*fx::fn("q"), *u);
  CHECK(check_vcat(p).ok());
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK((p.base->C().obj[p.h(a, b)] == "1") == g.le[a][b]);
}

TEST_CASE("pushing along identities changes nothing") {
  for (const auto& m : fx::bundled().monvcats) {
    auto id = identity_monoidal(m->m->base);
    CHECK(same_vcat(push_vcat(id, *m->m), *m->m));
    CHECK(same_symmonclosed(*push_monvcat(id, *m), *m));
    VFunctor F = identity_vfunctor(m->m);
    CHECK(push_vfunctor(id, F) == F);
    CHECK(push_vnat(id, identity_vnat(F)).comp == identity_vnat(F).comp);
  }
}

TEST_CASE("pushing uG3 along iota keeps residua") {
  VCat p = push_vcat(*fx::fn("iota"), *self_enriched(fx::G3()));
  CHECK(p.base->C().obj[p.h(2, 1)] == "1/2");
  CHECK(check_vcat(p).ok());
}

TEST_CASE("pushed hom functor and identity families") {
  auto q = fx::fn("q");
  auto g3 = self_enriched(fx::G3());
  CHECK(check_vfunctor(push_vfunctor(*q, hom_vfunctor(g3))).ok());
  VFunctor fam = push_nat_family(identity_monoidal_nat(q), *g3);
  CHECK(fam == identity_vfunctor(std::make_shared<const VCat>(push_vcat(*q, *g3))));
}

TEST_CASE("pointwise family iota => ceil is an identity-on-objects V-functor") {
  auto g3 = self_enriched(fx::G3());
  auto phi = fx::cell("iota_ceil");
  VFunctor fam = push_nat_family(*phi, *g3);
  CHECK(check_vfunctor(fam).ok());
  CHECK(fam.omap == std::vector<int>{0, 1, 2});
  MonVFunctor mon = push_nat_family_mon(*phi, *fx::u(fx::G3()));
  CHECK(check_monvfunctor(mon).ok());
  CHECK(check_strict_symmetric(mon).ok());
  // naturality in the V-functor: ceil_*(F) ∘ φ_* = φ_* ∘ iota_*(F) for F the hom functor
  VFunctor H = hom_vfunctor(g3);
  VFunctor lhs = compose(push_vfunctor(*fx::fn("ceil"), H), push_nat_family(*phi, *H.src));
  VFunctor rhs = compose(push_nat_family(*phi, *H.dst), push_vfunctor(*fx::fn("iota"), H));
  CHECK(lhs.omap == rhs.omap);
  CHECK(lhs.hmap == rhs.hmap);
}

TEST_CASE("pushed monoidal V-categories") {
  auto qm = push_monvcat(*fx::fn("q"), *fx::u(fx::G3()));
  CHECK(check_symmonclosed(*qm).ok());
  auto im = push_monvcat(*fx::fn("iota"), *fx::u(fx::G3()));
  CHECK(check_symmonclosed(*im).ok());
  // hom((1,1),(1/2,1/2)) = 1/2 ⊗ 1/2 = 0 in L3, while the tensored hom is
  // iota(min(1/2,1/2)) = 1/2: the tensor on homs is m^iota at (1/2,1/2)
  const Smcc& L = im->base();
  int P = 2 * 3 + 2, Q = 1 * 3 + 1;
  int t = im->tensor.hm(P, Q);
  CHECK(L.C().obj[L.dom(t)] == "0");
  CHECK(L.C().obj[L.cod(t)] == "1/2");
  CHECK(L.C().inverse(t) == -1);
}

TEST_CASE("canonical normalization of quantale and monoid autoenrichments") {
  for (const auto& v : {fx::B2(), fx::G3(), fx::L3()}) {
    MonVFunctor U = canonical_normalization(fx::u(v));
    // [1, a] = a
    for (int a = 0; a < v->n(); ++a) CHECK(U.ob(a) == a);
    CHECK(check_monvfunctor(U).ok());
  }
  MonVFunctor Uc = canonical_normalization(fx::u(fx::C2()));
  CHECK(Uc.ob(0) == 0);
  CHECK(fx::C2()->C().is_identity(Uc.F.hm(0, 0)));
  for (const auto& m : fx::bundled().monvcats) {
    INFO(m->name);
    MonVFunctor U = canonical_normalization(m);
    CHECK(check_monvfunctor(U).ok());
    CHECK(U.F.hmap == normalization_via_hom_functor(*m));
  }
}

TEST_CASE("theta and kappa") {
  auto m = fx::u(fx::G3());
  auto U = fx::share(canonical_normalization(m));
  auto id = fx::share(identity_monvfunctor(m));
  CHECK(theta(id).comp == identity_monvnat(U).comp);
  MonVNatTrans k = kappa(U);
  CHECK(check_monvnat(k).ok());
  for (int x = 0; x < m->n(); ++x) {
    int c = k.comp[x];
    int hx = m->m->h(U->ob(x), U->ob(x));
    CHECK(fx::G3()->C().cod[c] == hx);
  }
  // θ of the normalization itself is an identity on names
  CHECK(check_theta_normalization_identity(m).ok());
}

TEST_CASE("normalization transformations are unique") {
  auto m = fx::u(fx::B2());
  auto U = fx::share(canonical_normalization(m));
  CHECK(enumerate_monoidal_vnats(U, U).size() == 1);
  for (const auto& G : normalization_targets(fx::bundled())) {
    INFO(G->name);
    auto UG = fx::share(canonical_normalization(G->src));
    CHECK(enumerate_monoidal_vnats(UG, G).size() == 1);
  }
}

TEST_CASE("no monoidal transformation from the constant-top endofunctor to the identity") {
  auto m = fx::u(fx::G3());
  std::vector<MonVFunctor> all = enumerate_monvfunctors(m, m);
  const MonVFunctor* top = nullptr;
  for (const auto& S : all)
    if (S.F.omap == std::vector<int>{2, 2, 2}) top = &S;
  REQUIRE(top);
  auto T = fx::share(*top);
  auto id = fx::share(identity_monvfunctor(m));
  CHECK(enumerate_monoidal_vnats(T, id).empty());
  CHECK(enumerate_monoidal_vnats(id, T).size() == 1);
}

TEST_CASE("normality") {
  for (const auto& v : fx::bundled().bases) {
    INFO(v->name);
    CHECK(is_normal(canonical_normalization(fx::u(v))));
  }
  CHECK(is_normal(fx::fn("q")));
  for (const auto& G : fx::bundled().functors) {
    INFO(G->name);
    CHECK(is_normal_set(*G) == brute_normal(*G));
    if (G->symmetric) CHECK(is_normal(G) == brute_normal(*G));
  }
  CHECK_FALSE(is_normal_set(*fx::fn("ceil")));
  CHECK(is_normal_set(*fx::fn("iota")));
}

TEST_CASE("comparison K^G") {
  Comparison kq = comparison_KG(fx::fn("q"));
  CHECK(is_isomorphism(kq.K));
  auto id = fx::share(identity_monoidal(fx::B2()));
  Comparison ki = comparison_KG(id);
  CHECK(is_isomorphism(ki.K));
  for (int f = 0; f < fx::B2()->nm(); ++f) CHECK(ki.K.mo(f) == f);
  // ceil is not normal and K^ceil is not invertible
  CHECK_FALSE(is_isomorphism(comparison_KG(fx::fn("ceil")).K));
  CHECK(check_recovery_triangle(fx::fn("iota")).ok());
}
