// Randomized properties over the thin bases. The generator is a fixed-seed
// mt19937 so every run draws the same cases; each property states its oracle.

#include <doctest.h>

#include <random>
#include <sstream>

#include "support.hpp"

using namespace basechange;

namespace {

struct Chain {
  Ptr<Smcc> v;
  fx::QOracle q;
};

const std::vector<Chain>& chains() {
  static const std::vector<Chain> c = {{fx::B2(), fx::QOracle(quantale_B2())},
                                       {fx::G3(), fx::QOracle(quantale_G3())},
                                       {fx::L3(), fx::QOracle(quantale_L3())}};
  return c;
}

std::mt19937& rng() {
  static std::mt19937 g(20261015);
  return g;
}

int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng()); }

// A map between chains is a lax symmetric monoidal functor iff it is
// monotone, I ≤ f(I), and f(a)⊗f(b) ≤ f(a⊗b).
bool brute_lax(const Chain& s, const Chain& t, const std::vector<int>& f) {
  if (!t.q.le[t.q.unit()][f[s.q.unit()]]) return false;
  for (int a = 0; a < s.q.size(); ++a)
    for (int b = 0; b < s.q.size(); ++b) {
      if (s.q.le[a][b] && !t.q.le[f[a]][f[b]]) return false;
      if (!t.q.le[t.q.mul(f[a], f[b])][f[s.q.mul(a, b)]]) return false;
    }
  return true;
}

std::vector<int> random_map(int from, int to) {
  std::vector<int> f(from);
  for (auto& x : f) x = pick(to);
  return f;
}

// Draws until a lax map appears; the constant map to the top always qualifies.
Ptr<MonoidalFunctor> random_functor(const Chain& s, const Chain& t) {
  for (;;) {
    std::vector<int> f = random_map(s.q.size(), t.q.size());
    if (brute_lax(s, t, f)) return fx::share(thin_monoidal_functor("k", s.v, t.v, f));
  }
}

}  // namespace

TEST_CASE("thin functor construction agrees with the lax oracle") {
  for (int i = 0; i < 200; ++i) {
    const Chain& s = chains()[pick(3)];
    const Chain& t = chains()[pick(3)];
    std::vector<int> f = random_map(s.q.size(), t.q.size());
    bool lax = brute_lax(s, t, f);
    INFO(s.v->name << " -> " << t.v->name);
    if (lax) {
      MonoidalFunctor k = thin_monoidal_functor("k", s.v, t.v, f);
      CHECK(check_monoidal_functor(k).ok());
    } else {
      CHECK_THROWS_AS(thin_monoidal_functor("k", s.v, t.v, f), StructuralError);
    }
  }
}

TEST_CASE("pushforward homs are images of residua") {
  for (int i = 0; i < 30; ++i) {
    const Chain& s = chains()[pick(3)];
    const Chain& t = chains()[pick(3)];
    auto k = random_functor(s, t);
    VCat p = push_vcat(*k, *self_enriched(s.v));
    CHECK(check_vcat(p).ok());
    for (int a = 0; a < s.q.size(); ++a)
      for (int b = 0; b < s.q.size(); ++b) CHECK(p.h(a, b) == k->ob(s.q.res(a, b)));
  }
}

TEST_CASE("autoenrichment preserves random composites") {
  for (int i = 0; i < 25; ++i) {
    const Chain& a = chains()[pick(3)];
    const Chain& b = chains()[pick(3)];
    const Chain& c = chains()[pick(3)];
    auto G = random_functor(a, b);
    auto H = random_functor(b, c);
    auto HG = fx::share(compose(*H, *G));
    CHECK(check_monoidal_functor(*HG).ok());
    CHECK(grave_cell(HG) == groth_compose(grave_cell(H), grave_cell(G)));
    CHECK(check_fundamental_lemma(fx::share(grave(HG)), true).ok());
    CHECK(check_recovery_triangle(HG).ok());
  }
}

TEST_CASE("thin 2-cells exist exactly under the pointwise order") {
  for (int i = 0; i < 40; ++i) {
    const Chain& s = chains()[pick(3)];
    const Chain& t = chains()[pick(3)];
    auto F = random_functor(s, t);
    auto G = random_functor(s, t);
    bool below = true;
    for (int x = 0; x < s.q.size(); ++x) below = below && t.q.le[F->ob(x)][G->ob(x)];
    if (below) {
      auto a = fx::share(thin_monoidal_nat("a", F, G));
      CHECK(check_monoidal_nat(*a).ok());
      CHECK(check_monvnat(grave_nat(a)).ok());
    } else {
      CHECK_THROWS_AS(thin_monoidal_nat("a", F, G), StructuralError);
    }
  }
}

TEST_CASE("single-entry corruptions of internal homs are always detected") {
  for (int i = 0; i < 40; ++i) {
    const Chain& c = chains()[pick(3)];
    Smcc v = *c.v;
    int x = pick(v.n()), y = pick(v.n());
    int old = v.ihom[x * v.n() + y];
    int fresh = (old + 1 + pick(v.n() - 1)) % v.n();
    v.ihom[x * v.n() + y] = fresh;
    INFO(v.name << " [" << x << "," << y << "] := " << fresh);
    CHECK_FALSE(check_smcc(v).ok());
  }
}

TEST_CASE("single-entry corruptions of autoenriched composition are detected") {
  for (int i = 0; i < 30; ++i) {
    const Chain& c = chains()[pick(3)];
    VCat a = *self_enriched(c.v);
    int k = pick(static_cast<int>(a.comp.size()));
    int old = a.comp[k];
    int fresh = old;
    while (fresh == old) fresh = pick(a.base->nm());
    a.comp[k] = fresh;
    CHECK_FALSE(check_vcat(a).ok());
  }
}

TEST_CASE("instance layout noise canonicalizes away") {
  const std::string canon = bundled_text();
  InstanceFile f = parse_instance(canon);
  for (int i = 0; i < 20; ++i) {
    std::ostringstream noisy;
    auto spaces = [] { return std::string(1 + pick(3), pick(2) ? ' ' : '\t'); };
    for (const auto& r : f.records) {
      for (int k = pick(3); k > 0; --k) noisy << "\n";
      if (r.kind == "#") {
        noisy << "#" << (r.head[0].empty() ? "" : " " + r.head[0]) << "\n";
        continue;
      }
      noisy << r.kind;
      for (const auto& h : r.head) noisy << spaces() << h;
      if (pick(4) == 0) noisy << "  # note";
      noisy << "\n";
      if (!has_body(r.kind)) continue;
      for (const auto& line : r.body) {
        noisy << spaces();
        for (std::size_t w = 0; w < line.size(); ++w) noisy << (w ? spaces() : "") << line[w];
        noisy << "\n";
        if (pick(6) == 0) noisy << "    # indented comment\n";
      }
      noisy << "end\n";
    }
    CHECK(serialize_instance(parse_instance(noisy.str())) == canon);
  }
}
