#include <doctest.h>

#include "support.hpp"

using namespace basechange;

namespace {

std::string ob(const Smcc& v, int x) { return v.C().obj[x]; }

}  // namespace

TEST_CASE("uB2 homs and the tensor-on-homs inequality") {
  auto m = fx::u(fx::B2());
  const VCat& a = *m->m;
  CHECK(ob(*a.base, a.h(0, 1)) == "1");
  CHECK(ob(*a.base, a.h(1, 0)) == "0");
  // [a,a']∧[b,b'] ≤ [a∧b, a'∧b'] in all 16 cases, from the raw table
  fx::QOracle q(quantale_B2());
  int cases = 0;
  for (int x = 0; x < 2; ++x)
    for (int x2 = 0; x2 < 2; ++x2)
      for (int y = 0; y < 2; ++y)
        for (int y2 = 0; y2 < 2; ++y2, ++cases) {
          CHECK(q.le[q.mul(q.res(x, x2), q.res(y, y2))][q.res(q.mul(x, y), q.mul(x2, y2))]);
          int t = m->tensor.hm(x * 2 + y, x2 * 2 + y2);
          CHECK(a.base->dom(t) == m->mm->h(x * 2 + y, x2 * 2 + y2));
          CHECK(a.base->cod(t) == a.h(m->ten(x, y), m->ten(x2, y2)));
        }
  CHECK(cases == 16);
}

TEST_CASE("uC2: the tensor on the one hom is the identity of *") {
  auto m = fx::u(fx::C2());
  CHECK(m->n() == 1);
  int t = m->tensor.hm(0, 0);
  CHECK(fx::C2()->C().is_identity(t));
  CHECK(check_symmonclosed(*m).ok());
}

TEST_CASE("uL3 composition c(1,1/2,0) exists") {
  auto a = self_enriched(fx::L3());
  int c = a->c(2, 1, 0);
  const Smcc& L = *a->base;
  CHECK(ob(L, L.dom(c)) == "0");  // [1,1/2] ⊗ [1/2,0] = 1/2 ⊗ 1/2 = 0
  CHECK(ob(L, L.cod(c)) == "0");  // [1,0]
}

TEST_CASE("grave on hom components") {
  MonVFunctor gi = grave(fx::fn("iota"));
  const Smcc& L = *fx::L3();
  int h = gi.F.hm(1, 0);
  CHECK(ob(L, L.dom(h)) == "0");
  CHECK(ob(L, L.cod(h)) == "1/2");
  CHECK(check_monvfunctor(gi).ok());

  MonVFunctor gq = grave(fx::fn("q"));
  int k = gq.F.hm(2, 1);
  const Smcc& B = *fx::B2();
  CHECK(ob(B, B.dom(k)) == "0");
  CHECK(ob(B, B.cod(k)) == "0");

  auto id = fx::share(identity_monoidal(fx::G3()));
  MonVFunctor gid = grave(id);
  CHECK(check_monvfunctor(gid).ok());
  CHECK(gid.F.omap == std::vector<int>{0, 1, 2});
  CHECK(is_strict(gid));
}

TEST_CASE("grave on 2-cells") {
  auto ic = fx::cell("iota_ceil");
  MonVNatTrans g = grave_nat(ic);
  CHECK(check_monvnat(g).ok());
  auto one = fx::share(identity_monoidal_nat(fx::fn("q")));
  MonVNatTrans gi = grave_nat(one);
  CHECK(gi.comp == identity_monvnat(fx::share(grave(fx::fn("q")))).comp);
  for (const auto& c : fx::bundled().cells) {
    INFO(c->name);
    CHECK(check_monvnat(grave_nat(c)).ok());
  }
}

TEST_CASE("underlying SMCC of q_*uG3 is the order of G3") {
  auto qm = push_monvcat(*fx::fn("q"), *fx::u(fx::G3()));
  auto v = underlying_smcc(*qm);
  fx::QOracle g(quantale_G3());
  CHECK(check_smcc(*v).ok());
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(v->C().hom(a, b).size() == (g.le[a][b] ? 1u : 0u));
  for (const auto& m : fx::bundled().monvcats) {
    INFO(m->name);
    CHECK(check_smcc(*underlying_smcc(*m)).ok());
  }
}

TEST_CASE("superposition of the reconstruction") {
  for (const auto& m : fx::bundled().monvcats) {
    INFO(m->name);
    SuperposedVCat s = reconstruction_superposition(m);
    CHECK(check_superposed(s).ok());
    auto target = std::make_shared<const VCat>(s.as_vcat());
    CHECK(superposed_inclusion(s, target) == superposed_inclusion_right(s, target));
    CHECK(superposed_inclusion(s, target).hmap == canonical_isos(*m));
  }
}

TEST_CASE("trivial superposition gives identity components") {
  auto m = fx::u(fx::B2());
  SuperposedVCat s{m->m, hom_vfunctor(m->m), m->m->comp, m->m->unit};
  CHECK(check_superposed(s).ok());
  VFunctor S = superposed_inclusion(s, m->m);
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) CHECK(fx::B2()->C().is_identity(S.hm(A, B)));
}

TEST_CASE("reconstruction isomorphisms") {
  Reconstruction rb = reconstruct_iso(fx::u(fx::B2()));
  CHECK(rb.report.ok());
  for (int A = 0; A < 2; ++A)
    for (int B = 0; B < 2; ++B) CHECK(fx::B2()->C().is_identity(rb.S.F.hm(A, B)));
  CHECK(reconstruct_iso(fx::u(fx::C2())).report.ok());
  CHECK(reconstruct_iso(push_monvcat(*fx::fn("q"), *fx::u(fx::G3()))).report.ok());
}

TEST_CASE("fundamental lemma") {
  auto gq = fx::share(grave(fx::fn("q")));
  CHECK(check_fundamental_lemma(gq, false).ok());
  CHECK(check_fundamental_lemma(gq, true).ok());
  auto id = fx::share(identity_monvfunctor(fx::u(fx::B2())));
  CHECK(check_fundamental_lemma(id, true).ok());
  CHECK(check_recovery_triangle(fx::fn("iota")).ok());
  CHECK(check_recovery_triangle(fx::fn("q")).ok());
}

TEST_CASE("recovery triangle detects a corrupted unit cell") {
  MonoidalFunctor k = *fx::fn("inv3");
  // inv3 is an automorphism of C3; e must be the identity, g1 breaks it
  k.e = k.dst->C().m("g1");
  LawReport r = check_recovery_triangle(fx::share(k));
  CHECK_FALSE(r.ok());
}

TEST_CASE("autoenrichment is 2-functorial on small probes") {
  AutoenrichProbe p{{fx::fn("r"), fx::fn("iota")}, {}};
  CHECK(check_autoenrichment_2functor(p).ok());
  // (iota r)` = iota` ∘ iota_*(r`) directly
  auto ir = fx::share(compose(*fx::fn("iota"), *fx::fn("r")));
  Groth1Cell lhs = grave_cell(ir);
  Groth1Cell rhs = groth_compose(grave_cell(fx::fn("iota")), grave_cell(fx::fn("r")));
  CHECK(lhs == rhs);

  auto id = fx::share(identity_monoidal(fx::B2()));
  CHECK(check_autoenrichment_2functor({{id}, {}}).ok());
  CHECK(check_autoenrichment_2functor({{fx::fn("r"), fx::fn("iota"), fx::fn("ceil")}, {fx::cell("iota_ceil")}}).ok());
}
