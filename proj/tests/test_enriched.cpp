#include <doctest.h>

#include "support.hpp"

using namespace basechange;

namespace {

std::string hom_name(const VCat& a, int A, int B) { return a.base->C().obj[a.h(A, B)]; }

}  // namespace

TEST_CASE("tensor of autoenrichments: whole hom table against the oracle") {
  struct Case {
    Ptr<Smcc> v;
    QuantaleDesc d;
  };
  for (const auto& [v, d] : {Case{fx::B2(), quantale_B2()}, Case{fx::G3(), quantale_G3()},
                             Case{fx::L3(), quantale_L3()}}) {
    fx::QOracle q(d);
    auto a = self_enriched(v);
    VCat t = tensor_vcat(*a, *a);
    const int n = a->n();
    REQUIRE(t.n() == n * n);
    CHECK(check_vcat(t).ok());
    for (int A = 0; A < n; ++A)
      for (int B = 0; B < n; ++B)
        for (int C = 0; C < n; ++C)
          for (int D = 0; D < n; ++D)
            CHECK(hom_name(t, A * n + B, C * n + D) == d.carrier[q.mul(q.res(A, C), q.res(B, D))]);
  }
  auto b2 = self_enriched(fx::B2());
  CHECK(hom_name(tensor_vcat(*b2, *b2), 0 * 2 + 1, 1 * 2 + 1) == "1");
  auto g3 = self_enriched(fx::G3());
  CHECK(hom_name(tensor_vcat(*g3, *g3), 2 * 3 + 2, 1 * 3 + 0) == "0");
}

TEST_CASE("unit V-categories") {
  VCat ub = unit_vcat(fx::B2());
  CHECK(ub.n() == 1);
  CHECK(hom_name(ub, 0, 0) == "1");
  CHECK(check_vcat(ub).ok());
  VCat uc = unit_vcat(fx::C2());
  CHECK(hom_name(uc, 0, 0) == "*");
  FinCat c0 = underlying_cat(uc);
  CHECK(c0.no() == 1);
  CHECK(c0.nm() == 2);
  FinCat b0 = underlying_cat(ub);
  CHECK(b0.no() == 1);
  CHECK(b0.nm() == 1);
}

TEST_CASE("opposites") {
  fx::QOracle l(quantale_L3());
  auto b2 = self_enriched(fx::B2());
  auto l3 = self_enriched(fx::L3());
  VCat bo = opposite_vcat(*b2), lo = opposite_vcat(*l3);
  CHECK(hom_name(bo, 0, 1) == "0");
  CHECK(hom_name(lo, 1, 2) == "1/2");
  for (int A = 0; A < 3; ++A)
    for (int B = 0; B < 3; ++B) CHECK(lo.h(A, B) == l.res(B, A));
  CHECK(check_vcat(lo).ok());
  CHECK(same_vcat(opposite_vcat(lo), *l3));
}

TEST_CASE("hom V-functor") {
  auto b2 = self_enriched(fx::B2());
  VFunctor h = hom_vfunctor(b2);
  CHECK(hom_name(*h.dst, 0, 0) == "1");
  CHECK(h.dst->obj[h.ob(0 * 2 + 1)] == "1");
  CHECK(check_vfunctor(h).ok());
  auto pushed = std::make_shared<const VCat>(push_vcat(*fx::fn("q"), *self_enriched(fx::G3())));
  CHECK(check_vfunctor(hom_vfunctor(pushed)).ok());
}

TEST_CASE("underlying categories") {
  FinCat b0 = underlying_cat(*self_enriched(fx::B2()));
  CHECK(same_cat(b0, fx::B2()->C()));
  FinCat c0 = underlying_cat(*self_enriched(fx::C2()));
  CHECK(c0.no() == 1);
  CHECK(c0.nm() == 2);
  CHECK(check_category(c0).ok());
  // Hom(1,[a,b]) nonempty iff a ≤ b
  fx::QOracle g(quantale_G3());
  FinCat g0 = *underlying(*self_enriched(fx::G3()), false).cat;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(g0.hom(a, b).size() == (g.le[a][b] ? 1u : 0u));
}

TEST_CASE("autoenrichments are symmetric monoidal closed") {
  for (const auto& v : fx::bundled().bases) {
    INFO(v->name);
    CHECK(check_symmonclosed(*autoenrich(v)).ok());
  }
}

TEST_CASE("closure mis-set on uG3 is named") {
  SymMonClosedVCat m = *fx::u(fx::G3());
  // [1/2, 0] is 0; claim 1/2 instead
  m.closure[1].rmap[0] = 1;
  LawReport r = check_symmonclosed(m);
  CHECK_FALSE(r.ok());
  CHECK(fx::has_law_prefix(r, "closure 1/2/"));
}

TEST_CASE("corrupted composition is named") {
  VCat a = *self_enriched(fx::L3());
  // c_{1,1/2,0} : [1,1/2]⊗[1/2,0] → [1,0] is 0 → 0; point it at the identity of 1/2
  a.comp[(2 * 3 + 1) * 3 + 0] = a.base->id(1);
  CHECK(fx::has_at(check_vcat(a), "composition-shape", "(1,1/2,0)"));
}

TEST_CASE("V-functor and V-transformation algebra") {
  auto g3 = self_enriched(fx::G3());
  VFunctor id = identity_vfunctor(g3);
  CHECK(check_vfunctor(id).ok());
  CHECK(compose(id, id) == id);
  VNatTrans t = identity_vnat(id);
  CHECK(check_vnat(t).ok());
  CHECK(vcomp(t, t).comp == t.comp);
  CHECK(whisker_left(id, t).comp == t.comp);
  CHECK(whisker_right(t, id).comp == t.comp);
}
