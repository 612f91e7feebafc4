#include <doctest.h>

#include "support.hpp"

using namespace basechange;

namespace {

// Symmetric monoidal V-functors uQ → uQ for a chain quantale Q are the maps f
// with [a,b] ≤ [fa,fb], I ≤ f(I) and f(a)⊗f(b) ≤ f(a⊗b); everything else is
// forced by thinness.
int brute_monvfunctor_count(const fx::QOracle& q) {
  const int n = q.size();
  int total = 1, count = 0;
  for (int i = 0; i < n; ++i) total *= n;
  for (int code = 0; code < total; ++code) {
    std::vector<int> f(n);
    for (int i = 0, c = code; i < n; ++i, c /= n) f[i] = c % n;
    bool ok = q.le[q.unit()][f[q.unit()]];
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        ok = q.le[q.res(a, b)][q.res(f[a], f[b])] && q.le[q.mul(f[a], f[b])][f[q.mul(a, b)]];
    count += ok;
  }
  return count;
}

GrothObj obj(Ptr<Smcc> v) { return groth_obj(fx::u(v)); }

BaseIndex small_index() {
  BaseIndex idx;
  idx.bases = {fx::G3(), fx::L3()};
  idx.functors = {fx::fn("iota")};
  idx.objects = {obj(fx::G3()), obj(fx::L3())};
  return close_base_index(idx);
}

}  // namespace

TEST_CASE("enumeration of monoidal V-functors matches the brute-force count") {
  fx::QOracle b(quantale_B2()), g(quantale_G3());
  CHECK(enumerate_monvfunctors(fx::u(fx::B2()), fx::u(fx::B2())).size() ==
        static_cast<std::size_t>(brute_monvfunctor_count(b)));
  CHECK(brute_monvfunctor_count(b) == 2);
  CHECK(enumerate_monvfunctors(fx::u(fx::G3()), fx::u(fx::G3())).size() ==
        static_cast<std::size_t>(brute_monvfunctor_count(g)));
}

TEST_CASE("designated cocartesian cells") {
  GrothObj A = obj(fx::G3());
  Groth1Cell p = designated_cocartesian(fx::fn("q"), A);
  CHECK(check_groth_1cell(p).ok());
  CHECK(*p.down == *fx::fn("q"));
  CHECK(same_symmonclosed(*p.dst.fibre, *push_monvcat(*fx::fn("q"), *fx::u(fx::G3()))));
  CHECK(p.up->F == identity_vfunctor(p.dst.fibre->m));
  CHECK(is_strict(*p.up));

  auto id = fx::share(identity_monoidal(fx::G3()));
  CHECK(designated_cocartesian(id, A) == groth_identity(A));
}

TEST_CASE("designated cocartesian cells compose") {
  GrothObj A = obj(fx::G3());
  Groth1Cell pq = designated_cocartesian(fx::fn("q"), A);
  Groth1Cell pr = designated_cocartesian(fx::fn("r"), pq.dst);
  CHECK(groth_compose(pr, pq) == designated_cocartesian(fx::fn("rq"), A));
  CHECK(groth_compose(pq, groth_identity(A)) == pq);
  CHECK(groth_compose(groth_identity(pq.dst), pq) == pq);
}

TEST_CASE("2-cell algebra in the total 2-category") {
  Groth1Cell g = grave_cell(fx::fn("ceil"));
  Groth2Cell a = grave_cell2(fx::cell("iota_ceil"));
  CHECK(check_groth_2cell(a).ok());
  CHECK(groth_vcomp(a, groth_identity2(a.src)) == a);
  CHECK(groth_vcomp(groth_identity2(a.dst), a) == a);
  CHECK(groth_whisker_right(a, groth_identity(a.src.src)) == a);
  CHECK(groth_whisker_left(groth_identity(a.src.dst), a) == a);
  auto one = fx::share(identity_monoidal_nat(fx::fn("ceil")));
  CHECK(designated_cartesian(one, g) == groth_identity2(g));
  // right whiskering by the image of r agrees with the image of the whiskered cell
  Groth2Cell ar = groth_whisker_right(a, grave_cell(fx::fn("r")));
  auto ar0 = fx::share(whisker_right(*fx::cell("iota_ceil"), fx::fn("r")));
  CHECK(ar == grave_cell2(ar0));
  CHECK(check_groth_2cell(ar).ok());
}

TEST_CASE("split op-2-fibration on small indices") {
  BaseIndex idx;
  idx.bases = {fx::B2()};
  idx.objects = {obj(fx::B2())};
  BaseIndex closed = close_base_index(idx);
  CHECK(closed.functors.size() == 1);
  CHECK(check_split_op2fibration(closed).ok());

  BaseIndex s = small_index();
  CHECK(check_base_index(s).ok());
  CHECK(check_split_op2fibration(s).ok());
}

TEST_CASE("a non-cocartesian 1-cell in place of psi is detected") {
  BaseIndex s = small_index();
  Cleavage bad;
  bad.psi = [](Ptr<MonoidalFunctor> k, const GrothObj& A) {
    if (k->name == "iota" && same_smcc(*A.base, *fx::G3()) && same_symmonclosed(*A.fibre, *fx::u(fx::G3())))
      return grave_cell(k);
    return designated_cocartesian(k, A);
  };
  LawReport r = check_split_op2fibration(s, bad);
  CHECK_FALSE(r.ok());
  CHECK(fx::has_law_prefix(r, "cocartesian-"));
}

TEST_CASE("extension problems along psi(q) have one solution") {
  BaseIndex idx;
  idx.bases = {fx::G3(), fx::B2()};
  idx.functors = {fx::fn("q")};
  idx.objects = {obj(fx::G3()), obj(fx::B2())};
  BaseIndex closed = close_base_index(idx);
  Universe uc(&closed);
  Groth1Cell f = designated_cocartesian(fx::fn("q"), obj(fx::G3()));
  // every 2-cell α : g∘f ⇒ h over β = 1 extends uniquely along f
  int problems = 0;
  for (const auto& B : closed.objects)
    for (const auto& g : uc.one_cells(f.dst, B))
      for (const auto& h : uc.one_cells(f.src, B)) {
        Groth1Cell gf = groth_compose(g, f);
        for (const auto& alpha : uc.two_cells(gf, h)) {
          auto beta = fx::share(identity_monoidal_nat(g.down));
          if (!(*alpha.down == whisker_right(*beta, f.down))) continue;
          ++problems;
          CHECK(solve_extension_problem(uc, f, alpha, beta).size() == 1);
        }
      }
  CHECK(problems > 0);
}

TEST_CASE("lax slice to fibre: formulas") {
  GrothObj A = obj(fx::G3());
  GrothSliceObj idobj{A, groth_identity(A)};
  FibreSliceObj img = laxslice_to_fibre(idobj);
  CHECK(same_symmonclosed(*img.obj, *A.fibre));
  CHECK(*img.map == identity_monvfunctor(A.fibre));

  GrothSliceObj qobj{A, grave_cell(fx::fn("q"))};
  FibreSliceObj qi = laxslice_to_fibre(qobj);
  CHECK(same_symmonclosed(*qi.obj, *push_monvcat(*fx::fn("q"), *fx::u(fx::G3()))));
  CHECK(*qi.map == grave(fx::fn("q")));
}

TEST_CASE("Enr_V on objects and identities") {
  SliceObj b{fx::G3(), fx::fn("q")};
  FibreSliceObj e = enr_v(b);
  CHECK(same_symmonclosed(*e.obj, *push_monvcat(*fx::fn("q"), *fx::u(fx::G3()))));
  CHECK(*e.map == grave(fx::fn("q")));
  CHECK(enr_v(slice_identity(b)) == fibre_slice_identity(e));
  CHECK(laxslice_to_fibre(lift_to_groth(b)) == e);
}

TEST_CASE("Enr_V and the lax slice functor on the identity adjunction probe") {
  SliceProbe p = slice_probe(fx::adjunction("id_B2"));
  CHECK(check_enr_v(p).ok());
  CHECK(check_laxslice_to_fibre(p).ok());
}
