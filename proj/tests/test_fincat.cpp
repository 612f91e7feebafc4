#include <doctest.h>

#include "support.hpp"

using namespace basechange;

namespace {

// Independent category check: every composable pair composes to a morphism
// with the right endpoints, identities are neutral, all triples associate.
bool brute_category(const FinCat& c) {
  const int nm = c.nm();
  auto at = [&](int g, int f) { return c.comp[g * nm + f]; };
  for (int x = 0; x < c.no(); ++x)
    if (c.dom[c.ident[x]] != x || c.cod[c.ident[x]] != x) return false;
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (c.cod[f] != c.dom[g]) continue;
      int gf = at(g, f);
      if (gf < 0 || c.dom[gf] != c.dom[f] || c.cod[gf] != c.cod[g]) return false;
    }
  for (int f = 0; f < nm; ++f)
    if (at(f, c.ident[c.dom[f]]) != f || at(c.ident[c.cod[f]], f) != f) return false;
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g)
      for (int h = 0; h < nm; ++h)
        if (c.cod[f] == c.dom[g] && c.cod[g] == c.dom[h] && at(h, at(g, f)) != at(at(h, g), f))
          return false;
  return true;
}

FinCat bool_poset() {
  CatBuilder b("2");
  int x0 = b.object("0"), x1 = b.object("1");
  int i0 = b.morphism("1_0", x0, x0), i1 = b.morphism("1_1", x1, x1), u = b.morphism("u", x0, x1);
  b.identity(x0, i0);
  b.identity(x1, i1);
  b.set_comp(i0, i0, i0);
  b.set_comp(i1, i1, i1);
  b.set_comp(u, i0, u);
  b.set_comp(i1, u, u);
  return b.build();
}

// One object, End = {1, s}, s∘s given.
FinCat one_object(bool s_squared_is_identity, bool break_identity = false) {
  CatBuilder b("End");
  int x = b.object("*");
  int one = b.morphism("1", x, x), s = b.morphism("s", x, x);
  b.identity(x, one);
  b.set_comp(one, one, one);
  b.set_comp(s, one, break_identity ? one : s);
  b.set_comp(one, s, s);
  b.set_comp(s, s, s_squared_is_identity ? one : s);
  return b.build();
}

}  // namespace

TEST_CASE("boolean poset is a category") {
  FinCat c = bool_poset();
  CHECK(brute_category(c));
  CHECK(check_category(c).ok());
}

TEST_CASE("cyclic group of order two as a one-object category") {
  FinCat c = one_object(true);
  CHECK(brute_category(c));
  CHECK(check_category(c).ok());
}

TEST_CASE("idempotent endomorphism still gives a category") {
  // s∘s = s with 1 neutral is the two-element idempotent monoid.
  FinCat c = one_object(false);
  CHECK(brute_category(c));
  CHECK(check_category(c).ok());
}

TEST_CASE("broken identity law is named") {
  FinCat c = one_object(true, true);
  CHECK_FALSE(brute_category(c));
  LawReport r = check_category(c);
  CHECK_FALSE(r.ok());
  CHECK(fx::has_at(r, "right-identity", "s"));
}

TEST_CASE("missing composite is structural") {
  FinCat c = bool_poset();
  c.comp[2 * c.nm() + 0] = -1;  // u∘1_0
  LawReport r = check_category(c);
  CHECK_FALSE(r.structural.empty());
}

TEST_CASE("product categories") {
  const FinCat& b2 = fx::B2()->C();
  const FinCat& g3 = fx::G3()->C();
  FinCat bb = product_category(b2, b2);
  CHECK(bb.no() == 4);
  CHECK(bb.nm() == 9);
  CHECK(bb.nm() == b2.nm() * b2.nm());
  CHECK(check_category(bb).ok());
  CHECK(brute_category(bb));
  FinCat gb = product_category(g3, b2);
  CHECK(gb.no() == 6);
  CHECK(check_category(gb).ok());
}

TEST_CASE("functors and transformations") {
  auto b2 = std::make_shared<const FinCat>(fx::B2()->C());
  FinFunctor id = identity_functor(b2);
  CHECK(check_functor(id).ok());
  CHECK(check_nat({id, id, {b2->id(0), b2->id(1)}}).ok());

  // x ↦ (1 iff x = 1) is monotone G3 → B2
  const FinFunctor& q = fx::fn("q")->F;
  CHECK(check_functor(q).ok());
  CHECK(q.omap == std::vector<int>{0, 0, 1});
  CHECK(compose(q, identity_functor(q.src)) == q);

  FinFunctor bad = q;
  bad.omap = {1, 0, 1};  // not monotone: 0 ≤ 1/2 but 1 ≰ 0
  CHECK_FALSE(check_functor(bad).ok());
}

TEST_CASE("naturality failure is named") {
  auto g3 = std::make_shared<const FinCat>(fx::G3()->C());
  FinFunctor id = identity_functor(g3);
  FinNatTrans t{id, id, {g3->id(0), g3->id(1), g3->id(2)}};
  CHECK(check_nat(t).ok());
  t.comp[1] = g3->id(0);
  CHECK(fx::has_at(check_nat(t), "component-shape", "1/2"));
}

TEST_CASE("size guard") {
  const FinCat& b2 = fx::B2()->C();
  setenv("BASECHANGE_MAX_CELLS", "5", 1);
  CHECK_THROWS_AS(product_category(b2, b2), SizeGuardError);
  unsetenv("BASECHANGE_MAX_CELLS");
  CHECK_NOTHROW(product_category(b2, b2));
}
