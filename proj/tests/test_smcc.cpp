#include <doctest.h>

#include "support.hpp"

using namespace basechange;

namespace {

std::string obj(const Smcc& v, int x) { return v.C().obj[x]; }

// Internal homs of a quantale base agree with the residuum computed from the
// raw multiplication table, for every pair.
void check_residua(const Smcc& v, const fx::QOracle& q) {
  for (int a = 0; a < q.size(); ++a)
    for (int b = 0; b < q.size(); ++b) {
      INFO(q.d.name << " [" << q.d.carrier[a] << "," << q.d.carrier[b] << "]");
      CHECK(obj(v, v.H(v.C().o(q.d.carrier[a]), v.C().o(q.d.carrier[b]))) == q.d.carrier[q.res(a, b)]);
    }
}

}  // namespace

TEST_CASE("bundled bases are symmetric monoidal closed") {
  for (const auto& v : fx::bundled().bases) {
    INFO(v->name);
    CHECK(check_smcc(*v).ok());
  }
}

TEST_CASE("internal homs of the chains") {
  const Smcc& b2 = *fx::B2();
  const Smcc& g3 = *fx::G3();
  const Smcc& l3 = *fx::L3();
  CHECK(obj(b2, b2.H(1, 0)) == "0");
  CHECK(obj(g3, g3.H(1, 0)) == "0");
  CHECK(obj(l3, l3.H(1, 0)) == "1/2");
  check_residua(b2, fx::QOracle(quantale_B2()));
  check_residua(g3, fx::QOracle(quantale_G3()));
  check_residua(l3, fx::QOracle(quantale_L3()));
}

TEST_CASE("closedness failure when [1,0] is mis-set in B2") {
  Smcc v = *fx::B2();
  v.ihom[1 * 2 + 0] = 1;
  LawReport r = check_smcc(v);
  CHECK(fx::has_at(r, "closedness", "(1,1,0)"));
}

TEST_CASE("monoid bases") {
  Smcc t = monoid_to_smcc(monoid_trivial());
  CHECK(t.n() == 1);
  CHECK(t.nm() == 1);
  CHECK(check_smcc(t).ok());

  const Smcc& c2 = *fx::C2();
  CHECK(c2.nm() == 2);
  int g = c2.C().m("g1");
  CHECK(c2.transpose(0, 0, g) == g);
  CHECK(c2.untranspose(0, 0, g) == g);
  CHECK(check_smcc(monoid_to_smcc(monoid_cyclic(3))).ok());
}

TEST_CASE("transpose is a bijection on every hom") {
  for (const auto& vp : fx::bundled().bases) {
    const Smcc& v = *vp;
    for (int A = 0; A < v.n(); ++A)
      for (int B = 0; B < v.n(); ++B)
        for (int C = 0; C < v.n(); ++C) {
          const auto& src = v.C().hom(v.ten(A, B), C);
          const auto& dst = v.C().hom(B, v.H(A, C));
          INFO(v.name << " " << A << B << C);
          CHECK(src.size() == dst.size());
          for (int f : src) CHECK(v.untranspose(A, C, v.transpose(A, B, f)) == f);
        }
  }
}

TEST_CASE("empty transpose in G3 at (1/2,1/2,0)") {
  const Smcc& g3 = *fx::G3();
  CHECK(g3.C().hom(g3.ten(1, 1), 0).empty());
  CHECK(g3.H(1, 0) == 0);
  CHECK(g3.C().hom(1, g3.H(1, 0)).empty());
}

TEST_CASE("lax inclusion G3 into L3") {
  auto iota = fx::fn("iota");
  CHECK(check_monoidal_functor(*iota).ok());
  CHECK(satisfies_symmetry(*iota));
  CHECK_FALSE(is_strong(*iota));
  CHECK(iota->dst->C().inverse(iota->M(1, 1)) == -1);
  // oracle: max(0,a+b-1) ≤ min(a,b) on the halves
  fx::QOracle g(quantale_G3()), l(quantale_L3());
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(l.le[l.mul(a, b)][g.mul(a, b)]);
}

TEST_CASE("q is strict") {
  auto q = fx::fn("q");
  CHECK(check_monoidal_functor(*q).ok());
  CHECK(is_strict(*q));
  CHECK(check_monoidal_nat(identity_monoidal_nat(q)).ok());
}

TEST_CASE("non-monotone object map has no thin functor") {
  CHECK_THROWS_AS(thin_monoidal_functor("bad", fx::G3(), fx::B2(), {1, 0, 1}), StructuralError);
  // monotone but not lax: the unit would need 1 ≤ 0
  CHECK_THROWS_AS(thin_monoidal_functor("bad", fx::G3(), fx::B2(), {0, 0, 0}), StructuralError);
}

TEST_CASE("corrupted multiplication cell is named") {
  MonoidalFunctor k = *fx::fn("inv3");
  CHECK(check_monoidal_functor(k).ok());
  k.m[0] = k.dst->C().m("g1");  // one object, so one multiplication cell
  LawReport r = check_monoidal_functor(k);
  CHECK_FALSE(r.ok());
  CHECK(fx::has_law_prefix(r, "monoidal-"));
}

TEST_CASE("2-cell algebra in the base") {
  auto ic = fx::cell("iota_ceil"), ct = fx::cell("ceil_top");
  MonoidalNatTrans v = vcomp(*ct, *ic);
  CHECK(check_monoidal_nat(v).ok());
  CHECK(v == *fx::cell("iota_top"));
  CHECK(vcomp(*ic, identity_monoidal_nat(ic->src)) == *ic);
  CHECK(whisker_right(*ic, fx::fn("r")).comp.size() == 2);
  CHECK(check_monoidal_nat(whisker_right(*ic, fx::fn("r"))).ok());
  CHECK(check_monoidal_nat(whisker_left(fx::fn("1_L3"), *ic)).ok());
}
