#include "basechange/groth.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "basechange/autoenrich.hpp"
#include "basechange/parallel.hpp"

namespace basechange {

namespace {

template <class T>
Ptr<T> share(T v) {
  return std::make_shared<const T>(std::move(v));
}

bool same_functor_shape(const MonoidalFunctor& k, const Smcc& src, const Smcc& dst) {
  return same_smcc(*k.src, src) && same_smcc(*k.dst, dst);
}

bool is_identity_functor(const MonoidalFunctor& k) {
  return same_smcc(*k.src, *k.dst) && k == identity_monoidal(k.src);
}

bool is_identity_nat(const MonoidalNatTrans& a) {
  return *a.src == *a.dst && a == identity_monoidal_nat(a.src);
}

// ℓ↑ ∘ κ_*A↑ for a base cell κ with codomain ℓ↓.
Ptr<MonVFunctor> after_push(const MonVFunctor& up, const MonoidalNatTrans& k,
                            const SymMonClosedVCat& A) {
  return share(compose(up, push_nat_family_mon(k, A)));
}

std::mutex push_mu;

}  // namespace

bool operator==(const GrothObj& a, const GrothObj& b) {
  return same_smcc(*a.base, *b.base) && same_symmonclosed(*a.fibre, *b.fibre);
}

bool operator==(const Groth1Cell& a, const Groth1Cell& b) {
  return a.src == b.src && a.dst == b.dst && *a.down == *b.down && *a.up == *b.up;
}

bool operator==(const Groth2Cell& a, const Groth2Cell& b) {
  return a.src == b.src && a.dst == b.dst && *a.down == *b.down && *a.up == *b.up;
}

GrothObj groth_obj(Ptr<SymMonClosedVCat> fibre) { return {fibre->m->base, fibre}; }

LawReport check_groth_1cell(const Groth1Cell& f) {
  LawReport rep;
  rep.merge(check_monoidal_functor(*f.down), "down/");
  rep.merge(check_monvfunctor(*f.up), "up/");
  if (!rep.ok()) return rep;
  if (!same_functor_shape(*f.down, *f.src.base, *f.dst.base)) rep.fail("groth-1cell-shape", "down");
  else if (!same_symmonclosed(*f.up->src, *pushed_fibre(f.down, f.src.fibre)) ||
           !same_symmonclosed(*f.up->dst, *f.dst.fibre))
    rep.fail("groth-1cell-shape", "up");
  return rep;
}

LawReport check_groth_2cell(const Groth2Cell& a) {
  LawReport rep;
  rep.merge(check_monoidal_nat(*a.down), "down/");
  rep.merge(check_monvnat(*a.up), "up/");
  if (!rep.ok()) return rep;
  if (!(*a.down->src == *a.src.down) || !(*a.down->dst == *a.dst.down))
    rep.fail("groth-2cell-shape", "down");
  else if (!(*a.up->src == *a.src.up) ||
           !(*a.up->dst == *after_push(*a.dst.up, *a.down, *a.src.src.fibre)))
    rep.fail("groth-2cell-shape", "up");
  return rep;
}

Ptr<SymMonClosedVCat> pushed_fibre(Ptr<MonoidalFunctor> k, Ptr<SymMonClosedVCat> A) {
  using Key = std::pair<const void*, const void*>;
  struct Entry {
    Ptr<MonoidalFunctor> k;
    Ptr<SymMonClosedVCat> A, out;
  };
  static std::map<Key, Entry> cache;
  Key key{k.get(), A.get()};
  {
    std::lock_guard<std::mutex> lock(push_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second.out;
  }
  auto out = push_monvcat(*k, *A);
  std::lock_guard<std::mutex> lock(push_mu);
  return cache.emplace(key, Entry{k, A, out}).first->second.out;
}

// ---- cells of ∫ ----

Groth1Cell groth_identity(const GrothObj& A) {
  auto id = share(identity_monoidal(A.base));
  auto up = share(identity_monvfunctor(A.fibre));
  return {A, A, id, up};
}

Groth1Cell groth_compose(const Groth1Cell& g, const Groth1Cell& f) {
  if (!(f.dst == g.src))
    throw StructuralError("groth composite: " + f.dst.name() + " is not " + g.src.name());
  auto down = share(compose(*g.down, *f.down));
  auto up = share(compose(*g.up, push_monvfunctor(*g.down, *f.up)));
  return {f.src, g.dst, down, up};
}

Groth2Cell groth_identity2(const Groth1Cell& f) {
  auto down = share(identity_monoidal_nat(f.down));
  MonVNatTrans t;
  t.name = "1_" + f.up->name;
  t.src = f.up;
  t.dst = after_push(*f.up, *down, *f.src.fibre);
  for (int x = 0; x < f.up->src->n(); ++x) t.comp.push_back(f.up->dst->m->j(f.up->ob(x)));
  return {f, f, down, share(std::move(t))};
}

Groth2Cell groth_vcomp(const Groth2Cell& b, const Groth2Cell& a) {
  if (!(a.dst == b.src)) throw StructuralError("groth vertical composite: middle 1-cells differ");
  const SymMonClosedVCat& A = *a.src.src.fibre;
  auto down = share(vcomp(*b.down, *a.down));
  auto a_push = share(push_nat_family_mon(*a.down, A));
  MonVNatTrans t = vcomp(whisker_right(*b.up, a_push), *a.up);
  t.dst = after_push(*b.dst.up, *down, A);
  return {a.src, b.dst, down, share(std::move(t))};
}

Groth2Cell groth_whisker_right(const Groth2Cell& a, const Groth1Cell& f) {
  if (!(f.dst == a.src.src)) throw StructuralError("groth right whisker: 1-cell does not land at the 2-cell");
  Groth1Cell src = groth_compose(a.src, f), dst = groth_compose(a.dst, f);
  auto down = share(whisker_right(*a.down, f.down));
  MonVNatTrans t;
  t.name = a.up->name + "*" + f.up->name;
  t.src = src.up;
  t.dst = after_push(*dst.up, *down, *f.src.fibre);
  for (int x = 0; x < f.up->src->n(); ++x) t.comp.push_back(a.up->comp[f.up->ob(x)]);
  return {src, dst, down, share(std::move(t))};
}

Groth2Cell groth_whisker_left(const Groth1Cell& u, const Groth2Cell& a) {
  if (!(a.src.dst == u.src)) throw StructuralError("groth left whisker: 2-cell does not land at the 1-cell");
  Groth1Cell src = groth_compose(u, a.src), dst = groth_compose(u, a.dst);
  auto down = share(whisker_left(u.down, *a.down));
  const MonoidalFunctor& k = *u.down;
  const Smcc& W = *k.dst;
  MonVNatTrans t;
  t.name = u.up->name + "*" + a.up->name;
  t.src = src.up;
  t.dst = after_push(*dst.up, *down, *a.src.src.fibre);
  const MonVFunctor& g = *a.up->src;
  const MonVFunctor& h = *a.dst.up;
  for (int x = 0; x < g.src->n(); ++x) {
    int pushed = W.comp(k.mo(a.up->comp[x]), k.e);
    t.comp.push_back(u.up->F.on_name(g.ob(x), h.ob(x), pushed));
  }
  return {src, dst, down, share(std::move(t))};
}

Groth1Cell designated_cocartesian(Ptr<MonoidalFunctor> k, const GrothObj& A) {
  if (!same_smcc(*k->src, *A.base))
    throw StructuralError("psi(" + k->name + "," + A.name() + "): functor does not start at the base");
  auto B = pushed_fibre(k, A.fibre);
  return {A, GrothObj{k->dst, B}, k, share(identity_monvfunctor(B))};
}

Groth2Cell designated_cartesian(Ptr<MonoidalNatTrans> kappa, const Groth1Cell& g) {
  if (!(*kappa->dst == *g.down))
    throw StructuralError("phi(" + kappa->name + "," + g.up->name + "): 1-cell is not over the codomain");
  Groth1Cell f{g.src, g.dst, kappa->src, after_push(*g.up, *kappa, *g.src.fibre)};
  MonVNatTrans t = identity_monvnat(f.up);
  t.name = "phi(" + kappa->name + "," + g.up->name + ")";
  return {f, g, kappa, share(std::move(t))};
}

GrothObj grave_obj(Ptr<Smcc> v) { return {v, autoenrich(v)}; }

Groth1Cell grave_cell(Ptr<MonoidalFunctor> G) {
  return {grave_obj(G->src), grave_obj(G->dst), G, share(grave(G))};
}

Groth2Cell grave_cell2(Ptr<MonoidalNatTrans> a) {
  return {grave_cell(a->src), grave_cell(a->dst), a, share(grave_nat(a))};
}

// ---- enumeration and problem solving ----

std::vector<MonVFunctor> enumerate_monvfunctors(Ptr<SymMonClosedVCat> M, Ptr<SymMonClosedVCat> N) {
  const VCat& a = *M->m;
  const VCat& b = *N->m;
  const Smcc& V = M->base();
  if (!same_smcc(V, N->base())) throw StructuralError("monoidal V-functors between different bases");
  const int n = M->n(), nn = N->n();
  std::size_t omaps = 1;
  for (int i = 0; i < n; ++i) {
    omaps *= static_cast<std::size_t>(nn);
    if (omaps > max_candidates()) throw SizeGuardError("size guard: too many object maps " + M->name + " -> " + N->name);
  }
  std::vector<MonVFunctor> out;
  std::size_t budget = 0;
  std::vector<int> om(n, 0);
  for (std::size_t k = 0; k < omaps; ++k) {
    // one candidate list per hom, then e, then each m
    std::vector<const std::vector<int>*> slots;
    std::vector<std::vector<int>> owned;
    owned.reserve(1 + n * n);
    bool empty = false;
    std::size_t total = 1;
    for (int A = 0; A < n && !empty; ++A)
      for (int B = 0; B < n && !empty; ++B) {
        slots.push_back(&V.C().hom(a.h(A, B), b.h(om[A], om[B])));
        empty = slots.back()->empty();
        total *= slots.back()->size();
      }
    const int I = M->unit_obj, J = N->unit_obj;
    if (!empty) {
      slots.push_back(&V.C().hom(V.unit, b.h(J, om[I])));
      empty = slots.back()->empty();
      total *= slots.back()->size();
    }
    for (int x = 0; x < n && !empty; ++x)
      for (int y = 0; y < n && !empty; ++y) {
        slots.push_back(&V.C().hom(V.unit, b.h(N->ten(om[x], om[y]), om[M->ten(x, y)])));
        empty = slots.back()->empty();
        total *= slots.back()->size();
      }
    if (!empty) {
      budget += total;
      if (budget > max_candidates()) throw SizeGuardError("size guard: too many candidate monoidal V-functors");
      std::vector<std::size_t> ix(slots.size(), 0);
      for (std::size_t c = 0; c < total; ++c) {
        MonVFunctor S;
        S.name = M->name + "->" + N->name + "#" + std::to_string(out.size());
        S.src = M;
        S.dst = N;
        S.F.src = M->m;
        S.F.dst = N->m;
        S.F.omap = om;
        std::size_t s = 0;
        for (; s < static_cast<std::size_t>(n * n); ++s) S.F.hmap.push_back((*slots[s])[ix[s]]);
        S.e = (*slots[s])[ix[s]];
        for (++s; s < slots.size(); ++s) S.m.push_back((*slots[s])[ix[s]]);
        if (check_monvfunctor(S).ok()) out.push_back(std::move(S));
        for (std::size_t d = slots.size(); d-- > 0;) {
          if (++ix[d] < slots[d]->size()) break;
          ix[d] = 0;
        }
      }
    }
    for (int i = n - 1; i >= 0; --i) {
      if (++om[i] < nn) break;
      om[i] = 0;
    }
  }
  return out;
}

LawReport check_base_index(const BaseIndex& idx) {
  LawReport rep;
  for (const auto& v : idx.bases) rep.merge(check_smcc(*v), "base " + v->name + "/");
  for (const auto& k : idx.functors) rep.merge(check_monoidal_functor(*k), "functor " + k->name + "/");
  for (const auto& c : idx.cells) rep.merge(check_monoidal_nat(*c), "cell " + c->name + "/");
  for (const auto& A : idx.objects) rep.merge(check_symmonclosed(*A.fibre), "object " + A.name() + "/");
  auto listed = [&](const Smcc& v) {
    for (const auto& b : idx.bases)
      if (same_smcc(*b, v)) return true;
    return false;
  };
  for (const auto& k : idx.functors)
    if (!listed(*k->src) || !listed(*k->dst)) rep.broken("functor " + k->name + " leaves the index");
  for (const auto& c : idx.cells) {
    bool found_src = false, found_dst = false;
    for (const auto& k : idx.functors) {
      found_src = found_src || *k == *c->src;
      found_dst = found_dst || *k == *c->dst;
    }
    if (!found_src || !found_dst) rep.broken("cell " + c->name + " runs between unlisted functors");
  }
  for (const auto& A : idx.objects)
    if (!listed(*A.base)) rep.broken("object " + A.name() + " lies over an unlisted base");
  return rep;
}

BaseIndex close_base_index(const BaseIndex& idx) {
  BaseIndex out;
  out.bases = idx.bases;
  out.objects = idx.objects;
  auto find_functor = [&](const MonoidalFunctor& k) -> Ptr<MonoidalFunctor> {
    for (const auto& f : out.functors)
      if (*f == k) return f;
    return nullptr;
  };
  auto add_functor = [&](Ptr<MonoidalFunctor> k) {
    if (find_functor(*k)) return false;
    out.functors.push_back(k);
    check_size(out.functors.size(), "closed base index functors");
    return true;
  };
  for (const auto& v : idx.bases) {
    MonoidalFunctor id = identity_monoidal(v);
    id.name = "1_" + v->name;
    add_functor(share(std::move(id)));
  }
  for (const auto& k : idx.functors) add_functor(k);
  for (bool grew = true; grew;) {
    grew = false;
    const auto snapshot = out.functors;
    for (const auto& g : snapshot)
      for (const auto& f : snapshot)
        if (same_smcc(*f->dst, *g->src)) {
          MonoidalFunctor gf = compose(*g, *f);
          gf.name = g->name + "." + f->name;
          grew = add_functor(share(std::move(gf))) || grew;
        }
  }
  auto canon = [&](MonoidalNatTrans t) {
    t.src = find_functor(*t.src);
    t.dst = find_functor(*t.dst);
    if (!t.src || !t.dst) throw StructuralError("cell " + t.name + " leaves the closed functor list");
    return t;
  };
  auto add_cell = [&](MonoidalNatTrans t) {
    for (const auto& c : out.cells)
      if (*c == t) return false;
    out.cells.push_back(share(canon(std::move(t))));
    check_size(out.cells.size(), "closed base index cells");
    return true;
  };
  for (const auto& k : out.functors) {
    MonoidalNatTrans id = identity_monoidal_nat(k);
    id.name = "1_" + k->name;
    add_cell(std::move(id));
  }
  for (const auto& c : idx.cells) add_cell(*c);
  for (bool grew = true; grew;) {
    grew = false;
    const auto snapshot = out.cells;
    for (const auto& b : snapshot)
      for (const auto& a : snapshot)
        if (*a->dst == *b->src) {
          MonoidalNatTrans ba = vcomp(*b, *a);
          ba.name = b->name + "." + a->name;
          grew = add_cell(std::move(ba)) || grew;
        }
    for (const auto& a : snapshot)
      for (const auto& f : out.functors) {
        if (same_smcc(*f->dst, *a->src->src)) {
          MonoidalNatTrans af = whisker_right(*a, f);
          af.name = a->name + "*" + f->name;
          grew = add_cell(std::move(af)) || grew;
        }
        if (same_smcc(*a->src->dst, *f->src)) {
          MonoidalNatTrans fa = whisker_left(f, *a);
          fa.name = f->name + "*" + a->name;
          grew = add_cell(std::move(fa)) || grew;
        }
      }
  }
  return out;
}

struct Universe::Memo {
  std::mutex mu;
  struct One {
    Ptr<SymMonClosedVCat> a, b;
    Ptr<MonoidalFunctor> k;
    std::vector<Groth1Cell> cells;
  };
  std::map<std::tuple<const void*, const void*, const void*>, One> ones;
};

Universe::Universe(const BaseIndex* i) : idx(i), memo_(std::make_shared<Memo>()) {}

std::vector<Groth1Cell> Universe::one_cells_over(const GrothObj& A, const GrothObj& B,
                                                 Ptr<MonoidalFunctor> k) const {
  auto key = std::make_tuple(static_cast<const void*>(A.fibre.get()),
                             static_cast<const void*>(B.fibre.get()), static_cast<const void*>(k.get()));
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->ones.find(key);
    if (it != memo_->ones.end()) return it->second.cells;
  }
  std::vector<Groth1Cell> cells;
  if (same_functor_shape(*k, *A.base, *B.base))
    for (auto& up : enumerate_monvfunctors(pushed_fibre(k, A.fibre), B.fibre))
      cells.push_back({A, B, k, share(std::move(up))});
  std::lock_guard<std::mutex> lock(memo_->mu);
  return memo_->ones.emplace(key, Memo::One{A.fibre, B.fibre, k, cells}).first->second.cells;
}

std::vector<Groth1Cell> Universe::one_cells(const GrothObj& A, const GrothObj& B) const {
  std::vector<Groth1Cell> out;
  if (!idx) return out;
  for (const auto& k : idx->functors)
    if (same_functor_shape(*k, *A.base, *B.base))
      for (auto& c : one_cells_over(A, B, k)) out.push_back(std::move(c));
  return out;
}

std::vector<Groth2Cell> Universe::two_cells_over(const Groth1Cell& f, const Groth1Cell& g,
                                                 Ptr<MonoidalNatTrans> kappa) const {
  std::vector<Groth2Cell> out;
  if (!(*kappa->src == *f.down) || !(*kappa->dst == *g.down)) return out;
  auto target = after_push(*g.up, *kappa, *f.src.fibre);
  for (auto& t : enumerate_monoidal_vnats(f.up, target)) out.push_back({f, g, kappa, share(std::move(t))});
  return out;
}

std::vector<Groth2Cell> Universe::two_cells(const Groth1Cell& f, const Groth1Cell& g) const {
  std::vector<Groth2Cell> out;
  if (!idx) return out;
  for (const auto& c : idx->cells)
    for (auto& a : two_cells_over(f, g, c)) out.push_back(std::move(a));
  return out;
}

std::vector<Groth2Cell> solve_extension_problem(const Universe& u, const Groth1Cell& f,
                                                const Groth2Cell& alpha,
                                                Ptr<MonoidalNatTrans> beta) {
  if (!(alpha.src.src == f.src)) throw StructuralError("extension problem: 2-cell does not start at the 1-cell");
  if (!same_smcc(*beta->src->src, *f.dst.base) ||
      !(whisker_right(*beta, f.down) == *alpha.down))
    throw StructuralError("extension problem: beta o Pf = P(alpha) fails");
  const GrothObj& B = f.dst;
  const GrothObj& C = alpha.src.dst;
  std::vector<Groth2Cell> out;
  std::vector<Groth1Cell> ks, ls;
  for (auto& k : u.one_cells_over(B, C, beta->src))
    if (groth_compose(k, f) == alpha.src) ks.push_back(k);
  for (auto& l : u.one_cells_over(B, C, beta->dst))
    if (groth_compose(l, f) == alpha.dst) ls.push_back(l);
  for (const auto& k : ks)
    for (const auto& l : ls)
      for (auto& cand : u.two_cells_over(k, l, beta))
        if (groth_whisker_right(cand, f) == alpha) out.push_back(std::move(cand));
  return out;
}

std::vector<Groth2Cell> solve_lifting_problem(const Universe& u, const Groth2Cell& phi,
                                              const Groth2Cell& gamma,
                                              Ptr<MonoidalNatTrans> kappa) {
  if (!(gamma.dst == phi.dst)) throw StructuralError("lifting problem: 2-cells do not share a codomain");
  if (!(*kappa->src == *gamma.src.down) || !(*kappa->dst == *phi.src.down) ||
      !(vcomp(*phi.down, *kappa) == *gamma.down))
    throw StructuralError("lifting problem: P(phi) . kappa = P(gamma) fails");
  std::vector<Groth2Cell> out;
  for (auto& cand : u.two_cells_over(gamma.src, phi.src, kappa))
    if (groth_vcomp(phi, cand) == gamma) out.push_back(std::move(cand));
  return out;
}

// ---- split op-2-fibration ----

LawReport check_split_op2fibration(const BaseIndex& idx, const Cleavage& cl) {
  Universe u(&idx);
  std::vector<std::function<LawReport()>> tasks;
  tasks.push_back([&] { return check_base_index(idx); });
  for (const auto& A : idx.objects)
    for (const auto& k : idx.functors) {
      if (!same_smcc(*k->src, *A.base)) continue;
      const std::string w = "psi(" + k->name + "," + A.name() + ")";
      tasks.push_back([&, k, w] {
        LawReport rep;
        Groth1Cell psi = cl.psi(k, A);
        if (!(psi.src == A) || !(*psi.down == *k) || !same_smcc(*psi.dst.base, *k->dst)) {
          rep.fail("cocartesian-over", w);
          return rep;
        }
        if (is_identity_functor(*k) && !(psi == groth_identity(A))) rep.fail("cocartesian-identity", w);
        for (const auto& k2 : idx.functors) {
          if (!same_smcc(*k2->src, *k->dst)) continue;
          auto kk = share(compose(*k2, *k));
          if (!(groth_compose(cl.psi(k2, psi.dst), psi) == cl.psi(kk, A)))
            rep.fail("cocartesian-composition", k2->name + " after " + w);
        }
        for (const auto& C : idx.objects)
          for (const auto& g : u.one_cells(A, C))
            for (const auto& h : u.one_cells(A, C))
              for (const auto& alpha : u.two_cells(g, h))
                for (const auto& beta : idx.cells) {
                  if (!same_smcc(*beta->src->src, *k->dst) || !same_smcc(*beta->src->dst, *C.base))
                    continue;
                  if (!(whisker_right(*beta, k) == *alpha.down)) continue;
                  auto sols = solve_extension_problem(u, psi, alpha, beta);
                  if (sols.size() != 1)
                    rep.fail("cocartesian-unique", w + " against " + alpha.up->name + " over " +
                                                       beta->name + ": " + std::to_string(sols.size()) +
                                                       " solutions");
                }
        return rep;
      });
    }
  for (const auto& A : idx.objects)
    for (const auto& B : idx.objects)
      for (const auto& kappa : idx.cells) {
        if (!same_smcc(*kappa->src->src, *A.base) || !same_smcc(*kappa->src->dst, *B.base)) continue;
        tasks.push_back([&, kappa] {
          LawReport rep;
          for (const auto& g : u.one_cells_over(A, B, kappa->dst)) {
            const std::string w = "phi(" + kappa->name + "," + g.up->name + ")";
            Groth2Cell phi = cl.phi(kappa, g);
            if (!(*phi.down == *kappa) || !(phi.dst == g)) {
              rep.fail("cartesian-over", w);
              continue;
            }
            if (is_identity_nat(*kappa) && !(phi == groth_identity2(g))) rep.fail("cartesian-identity", w);
            for (const auto& k2 : idx.cells) {
              if (!(*k2->dst == *kappa->src)) continue;
              auto kk = share(vcomp(*kappa, *k2));
              if (!(groth_vcomp(phi, cl.phi(k2, phi.src)) == cl.phi(kk, g)))
                rep.fail("cartesian-vertical", w + " after " + k2->name);
            }
            for (const auto& X : idx.objects)
              for (const auto& f : u.one_cells(X, A)) {
                auto kf = share(whisker_right(*kappa, f.down));
                if (!(groth_whisker_right(phi, f) == cl.phi(kf, groth_compose(g, f))))
                  rep.fail("cartesian-whisker-right", w + " * " + f.up->name);
              }
            for (const auto& D : idx.objects)
              for (const auto& v : u.one_cells(B, D)) {
                auto vk = share(whisker_left(v.down, *kappa));
                if (!(groth_whisker_left(v, phi) == cl.phi(vk, groth_compose(v, g))))
                  rep.fail("cartesian-whisker-left", v.up->name + " * " + w);
              }
            for (const auto& h : u.one_cells(A, B))
              for (const auto& gamma : u.two_cells(h, g))
                for (const auto& k0 : idx.cells) {
                  if (!(*k0->src == *h.down) || !(*k0->dst == *kappa->src)) continue;
                  if (!(vcomp(*kappa, *k0) == *gamma.down)) continue;
                  auto sols = solve_lifting_problem(u, phi, gamma, k0);
                  if (sols.size() != 1)
                    rep.fail("cartesian-unique", w + " against " + gamma.up->name + " over " + k0->name +
                                                     ": " + std::to_string(sols.size()) + " solutions");
                }
          }
          return rep;
        });
      }
  return merge_all(run_parallel(tasks));
}

// ---- lax slices ----

bool operator==(const FibreSliceObj& a, const FibreSliceObj& b) {
  return same_symmonclosed(*a.obj, *b.obj) && *a.map == *b.map;
}

bool operator==(const FibreSlice1& a, const FibreSlice1& b) {
  return a.src == b.src && a.dst == b.dst && *a.s == *b.s && *a.sigma == *b.sigma;
}

bool operator==(const FibreSlice2& a, const FibreSlice2& b) {
  return a.src == b.src && a.dst == b.dst && *a.alpha == *b.alpha;
}

GrothSlice1 groth_slice_compose(const GrothSlice1& t, const GrothSlice1& s) {
  Groth2Cell sigma = groth_vcomp(groth_whisker_right(t.sigma, s.s), s.sigma);
  return {s.src, t.dst, groth_compose(t.s, s.s), sigma};
}

GrothSlice1 groth_slice_identity(const GrothSliceObj& b) {
  return {b, b, groth_identity(b.obj), groth_identity2(b.map)};
}

FibreSlice1 fibre_slice_compose(const FibreSlice1& t, const FibreSlice1& s) {
  auto sigma = share(vcomp(whisker_right(*t.sigma, s.s), *s.sigma));
  return {s.src, t.dst, share(compose(*t.s, *s.s)), sigma};
}

FibreSlice1 fibre_slice_identity(const FibreSliceObj& b) {
  return {b, b, share(identity_monvfunctor(b.obj)), share(identity_monvnat(b.map))};
}

LawReport check_groth_slice_2cell(const GrothSlice2& a) {
  LawReport rep;
  rep.merge(check_groth_2cell(a.alpha), "cell/");
  if (!rep.ok()) return rep;
  Groth2Cell pasted = groth_vcomp(groth_whisker_left(a.src.dst.map, a.alpha), a.src.sigma);
  if (!(pasted == a.dst.sigma)) rep.fail("slice-2cell-condition", a.alpha.up->name);
  return rep;
}

FibreSliceObj laxslice_to_fibre(const GrothSliceObj& b) {
  return {pushed_fibre(b.map.down, b.obj.fibre), b.map.up};
}

FibreSlice1 laxslice_to_fibre(const GrothSlice1& s) {
  const SymMonClosedVCat& B = *s.src.obj.fibre;
  const MonoidalFunctor& g = *s.dst.map.down;
  auto up = share(compose(push_monvfunctor(g, *s.s.up), push_nat_family_mon(*s.sigma.down, B)));
  return {laxslice_to_fibre(s.src), laxslice_to_fibre(s.dst), up, s.sigma.up};
}

FibreSlice2 laxslice_to_fibre(const GrothSlice2& a) {
  const SymMonClosedVCat& B = *a.src.src.obj.fibre;
  const MonoidalFunctor& g = *a.src.dst.map.down;
  auto beta = share(push_nat_family_mon(*a.src.sigma.down, B));
  auto alpha = share(whisker_right(push_monvnat(g, *a.alpha.up), beta));
  return {laxslice_to_fibre(a.src), laxslice_to_fibre(a.dst), alpha};
}

namespace {

Groth2Cell unique_solution(std::vector<Groth2Cell> sols, const std::string& what) {
  if (sols.size() != 1)
    throw StructuralError(what + " has " + std::to_string(sols.size()) + " solutions, expected one");
  return std::move(sols[0]);
}

Ptr<MonoidalNatTrans> identity_cell_at(Ptr<Smcc> v) {
  return share(identity_monoidal_nat(share(identity_monoidal(v))));
}

// f' with f'∘ψ(Pf,B) = f, over 1_{PA}.
Groth1Cell solve_object(const Universe& u, const GrothSliceObj& b, const Cleavage& cl) {
  Groth1Cell psi = cl.psi(b.map.down, b.obj);
  auto one = identity_cell_at(b.map.dst.base);
  return unique_solution(solve_extension_problem(u, psi, groth_identity2(b.map), one),
                         "object extension problem").src;
}

struct SolvedOne {
  Groth1Cell s_beta;
  Groth2Cell beta0;
  Groth2Cell beta_prime;
};

SolvedOne solve_one(const Universe& u, const GrothSlice1& s, const Cleavage& cl) {
  const GrothSliceObj& B = s.src;
  const GrothSliceObj& C = s.dst;
  Groth1Cell psiB = cl.psi(B.map.down, B.obj);
  Groth1Cell psiC = cl.psi(C.map.down, C.obj);
  Groth1Cell g_prime = solve_object(u, C, cl);
  auto one = identity_cell_at(B.map.dst.base);
  Groth1Cell q = groth_compose(psiC, s.s);
  Groth2Cell beta0 = cl.phi(s.sigma.down, q);
  Groth1Cell s_beta =
      unique_solution(solve_extension_problem(u, psiB, groth_identity2(beta0.src), one),
                      "extension problem for s_beta")
          .src;
  Groth2Cell lifted = groth_whisker_left(g_prime, beta0);
  auto idPf = share(identity_monoidal_nat(B.map.down));
  Groth2Cell tau = unique_solution(solve_lifting_problem(u, lifted, s.sigma, idPf), "lifting problem for tau");
  Groth2Cell beta_prime = unique_solution(solve_extension_problem(u, psiB, tau, one),
                                          "extension problem for beta'");
  return {s_beta, beta0, beta_prime};
}

}  // namespace

FibreSliceObj laxslice_to_fibre_solved(const Universe& u, const GrothSliceObj& b, const Cleavage& cl) {
  Groth1Cell f_prime = solve_object(u, b, cl);
  return {f_prime.src.fibre, f_prime.up};
}

FibreSlice1 laxslice_to_fibre_solved(const Universe& u, const GrothSlice1& s, const Cleavage& cl) {
  SolvedOne r = solve_one(u, s, cl);
  return {laxslice_to_fibre_solved(u, s.src, cl), laxslice_to_fibre_solved(u, s.dst, cl), r.s_beta.up,
          r.beta_prime.up};
}

FibreSlice2 laxslice_to_fibre_solved(const Universe& u, const GrothSlice2& a, const Cleavage& cl) {
  const GrothSliceObj& B = a.src.src;
  const GrothSliceObj& C = a.src.dst;
  SolvedOne rb = solve_one(u, a.src, cl);
  SolvedOne rg = solve_one(u, a.dst, cl);
  Groth1Cell psiB = cl.psi(B.map.down, B.obj);
  Groth1Cell psiC = cl.psi(C.map.down, C.obj);
  Groth2Cell rho = groth_vcomp(groth_whisker_left(psiC, a.alpha), rb.beta0);
  auto idPf = share(identity_monoidal_nat(B.map.down));
  Groth2Cell alpha1 = unique_solution(solve_lifting_problem(u, rg.beta0, rho, idPf), "lifting problem for alpha'");
  auto one = identity_cell_at(B.map.dst.base);
  Groth2Cell agb = unique_solution(solve_extension_problem(u, psiB, alpha1, one),
                                   "extension problem for alpha_gamma_beta");
  return {laxslice_to_fibre_solved(u, a.src, cl), laxslice_to_fibre_solved(u, a.dst, cl), agb.up};
}

// ---- ordinary lax slice and Enr_V ----

Slice1 slice_compose(const Slice1& t, const Slice1& s) {
  auto sigma = share(vcomp(whisker_right(*t.sigma, s.s), *s.sigma));
  return {s.src, t.dst, share(compose(*t.s, *s.s)), sigma};
}

Slice1 slice_identity(const SliceObj& b) {
  return {b, b, share(identity_monoidal(b.obj)), share(identity_monoidal_nat(b.map))};
}

LawReport check_slice_1cell(const Slice1& s) {
  LawReport rep;
  rep.merge(check_monoidal_functor(*s.s), "s/");
  rep.merge(check_monoidal_nat(*s.sigma), "sigma/");
  if (!rep.ok()) return rep;
  if (!(*s.sigma->src == *s.src.map) || !(*s.sigma->dst == compose(*s.dst.map, *s.s)))
    rep.fail("slice-1cell-shape", s.sigma->name);
  return rep;
}

LawReport check_slice_2cell(const Slice2& a) {
  LawReport rep;
  rep.merge(check_monoidal_nat(*a.alpha), "alpha/");
  if (!rep.ok()) return rep;
  if (!(*a.alpha->src == *a.src.s) || !(*a.alpha->dst == *a.dst.s)) {
    rep.fail("slice-2cell-shape", a.alpha->name);
    return rep;
  }
  if (!(vcomp(whisker_left(a.src.dst.map, *a.alpha), *a.src.sigma) == *a.dst.sigma))
    rep.fail("slice-2cell-condition", a.alpha->name);
  return rep;
}

FibreSliceObj enr_v(const SliceObj& b) {
  auto G = share(grave(b.map));
  return {G->src, G};
}

FibreSlice1 enr_v(const Slice1& s) {
  const SymMonClosedVCat& uM = *autoenrich(s.src.obj);
  const MonoidalFunctor& H = *s.dst.map;
  auto up = share(compose(push_monvfunctor(H, grave(s.s)), push_nat_family_mon(*s.sigma, uM)));
  return {enr_v(s.src), enr_v(s.dst), up, share(grave_nat(s.sigma))};
}

FibreSlice2 enr_v(const Slice2& a) {
  const SymMonClosedVCat& uM = *autoenrich(a.src.src.obj);
  const MonoidalFunctor& H = *a.src.dst.map;
  auto beta = share(push_nat_family_mon(*a.src.sigma, uM));
  auto alpha = share(whisker_right(push_monvnat(H, grave_nat(a.alpha)), beta));
  return {enr_v(a.src), enr_v(a.dst), alpha};
}

GrothSliceObj lift_to_groth(const SliceObj& b) { return {grave_obj(b.obj), grave_cell(b.map)}; }

GrothSlice1 lift_to_groth(const Slice1& s) {
  return {lift_to_groth(s.src), lift_to_groth(s.dst), grave_cell(s.s), grave_cell2(s.sigma)};
}

GrothSlice2 lift_to_groth(const Slice2& a) {
  return {lift_to_groth(a.src), lift_to_groth(a.dst), grave_cell2(a.alpha)};
}

namespace {

bool same_slice_obj(const SliceObj& a, const SliceObj& b) {
  return same_smcc(*a.obj, *b.obj) && *a.map == *b.map;
}

template <class X>
LawReport expect_equal(const std::string& law, const std::string& w, const X& a, const X& b) {
  LawReport r;
  if (!(a == b)) r.fail(law, w);
  return r;
}

}  // namespace

LawReport check_enr_v(const SliceProbe& probe) {
  Universe u;
  std::vector<std::function<LawReport()>> tasks;
  for (const auto& b : probe.objects)
    tasks.push_back([&u, &b] {
      const std::string w = b.map->name;
      LawReport rep = expect_equal("enr-v-object", w, enr_v(b), laxslice_to_fibre(lift_to_groth(b)));
      rep.merge(expect_equal("enr-v-object-solved", w, enr_v(b),
                             laxslice_to_fibre_solved(u, lift_to_groth(b))));
      rep.merge(expect_equal("enr-v-identity", w, enr_v(slice_identity(b)), fibre_slice_identity(enr_v(b))));
      return rep;
    });
  for (const auto& s : probe.one_cells) {
    tasks.push_back([&u, &s] {
      const std::string w = s.sigma->name;
      LawReport rep = check_slice_1cell(s);
      if (!rep.ok()) return rep;
      FibreSlice1 e = enr_v(s);
      rep.merge(check_monvfunctor(*e.s), "enr-v-1cell/");
      rep.merge(check_monvnat(*e.sigma), "enr-v-1cell-sigma/");
      rep.merge(expect_equal("enr-v-1cell", w, e, laxslice_to_fibre(lift_to_groth(s))));
      rep.merge(expect_equal("enr-v-1cell-solved", w, e, laxslice_to_fibre_solved(u, lift_to_groth(s))));
      return rep;
    });
    for (const auto& t : probe.one_cells)
      if (same_slice_obj(s.dst, t.src))
        tasks.push_back([&s, &t] {
          return expect_equal("enr-v-composition", t.sigma->name + "." + s.sigma->name,
                              enr_v(slice_compose(t, s)), fibre_slice_compose(enr_v(t), enr_v(s)));
        });
  }
  for (const auto& a : probe.two_cells)
    tasks.push_back([&u, &a] {
      const std::string w = a.alpha->name;
      LawReport rep = check_slice_2cell(a);
      if (!rep.ok()) return rep;
      FibreSlice2 e = enr_v(a);
      rep.merge(check_monvnat(*e.alpha), "enr-v-2cell/");
      rep.merge(expect_equal("enr-v-2cell", w, e, laxslice_to_fibre(lift_to_groth(a))));
      rep.merge(expect_equal("enr-v-2cell-solved", w, e, laxslice_to_fibre_solved(u, lift_to_groth(a))));
      return rep;
    });
  return merge_all(run_parallel(tasks));
}

LawReport check_laxslice_to_fibre(const SliceProbe& probe) {
  std::vector<std::function<LawReport()>> tasks;
  for (const auto& b : probe.objects)
    tasks.push_back([&b] {
      GrothSliceObj g = lift_to_groth(b);
      return expect_equal("laxslice-identity", b.map->name, laxslice_to_fibre(groth_slice_identity(g)),
                          fibre_slice_identity(laxslice_to_fibre(g)));
    });
  for (const auto& s : probe.one_cells)
    for (const auto& t : probe.one_cells)
      if (same_slice_obj(s.dst, t.src))
        tasks.push_back([&s, &t] {
          GrothSlice1 gs = lift_to_groth(s), gt = lift_to_groth(t);
          return expect_equal("laxslice-composition", t.sigma->name + "." + s.sigma->name,
                              laxslice_to_fibre(groth_slice_compose(gt, gs)),
                              fibre_slice_compose(laxslice_to_fibre(gt), laxslice_to_fibre(gs)));
        });
  for (const auto& a : probe.two_cells) {
    tasks.push_back([&a] {
      GrothSlice2 g = lift_to_groth(a);
      LawReport rep = check_groth_slice_2cell(g);
      if (!rep.ok()) return rep;
      FibreSlice2 img = laxslice_to_fibre(g);
      rep.merge(check_monvnat(*img.alpha), "laxslice-2cell/");
      if (!(*img.alpha->src == *img.src.s) ||
          !(*img.alpha->dst == *img.dst.s))
        rep.fail("laxslice-2cell-shape", a.alpha->name);
      GrothSlice2 id{g.src, g.src, groth_identity2(g.src.s)};
      FibreSlice2 idimg = laxslice_to_fibre(id);
      if (!(*idimg.alpha == identity_monvnat(idimg.src.s)))
        rep.fail("laxslice-identity-2cell", a.src.sigma->name);
      return rep;
    });
    for (const auto& b : probe.two_cells)
      if (*a.dst.s == *b.src.s && *a.dst.sigma == *b.src.sigma)
        tasks.push_back([&a, &b] {
          GrothSlice2 ga = lift_to_groth(a), gb = lift_to_groth(b);
          GrothSlice2 ba{ga.src, gb.dst, groth_vcomp(gb.alpha, ga.alpha)};
          FibreSlice2 fa = laxslice_to_fibre(ga), fb = laxslice_to_fibre(gb);
          MonVNatTrans pasted = vcomp(*fb.alpha, *fa.alpha);
          LawReport rep;
          if (!(*laxslice_to_fibre(ba).alpha == pasted))
            rep.fail("laxslice-vertical", b.alpha->name + "." + a.alpha->name);
          return rep;
        });
    for (const auto& w : probe.one_cells) {
      if (same_slice_obj(a.src.dst, w.src))
        tasks.push_back([&a, &w] {
          GrothSlice2 ga = lift_to_groth(a);
          GrothSlice1 gw = lift_to_groth(w);
          GrothSlice2 wa{groth_slice_compose(gw, ga.src), groth_slice_compose(gw, ga.dst),
                         groth_whisker_left(gw.s, ga.alpha)};
          FibreSlice1 fw = laxslice_to_fibre(gw);
          MonVNatTrans expect = whisker_left(fw.s, *laxslice_to_fibre(ga).alpha);
          LawReport rep;
          if (!(*laxslice_to_fibre(wa).alpha == expect))
            rep.fail("laxslice-whisker-left", w.sigma->name + "*" + a.alpha->name);
          return rep;
        });
      if (same_slice_obj(w.dst, a.src.src))
        tasks.push_back([&a, &w] {
          GrothSlice2 ga = lift_to_groth(a);
          GrothSlice1 gw = lift_to_groth(w);
          GrothSlice2 aw{groth_slice_compose(ga.src, gw), groth_slice_compose(ga.dst, gw),
                         groth_whisker_right(ga.alpha, gw.s)};
          FibreSlice1 fw = laxslice_to_fibre(gw);
          MonVNatTrans expect = whisker_right(*laxslice_to_fibre(ga).alpha, fw.s);
          LawReport rep;
          if (!(*laxslice_to_fibre(aw).alpha == expect))
            rep.fail("laxslice-whisker-right", a.alpha->name + "*" + w.sigma->name);
          return rep;
        });
    }
  }
  Universe u;
  for (const auto& b : probe.objects)
    tasks.push_back([&u, &b] {
      GrothSliceObj g = lift_to_groth(b);
      return expect_equal("laxslice-solved-object", b.map->name, laxslice_to_fibre(g),
                          laxslice_to_fibre_solved(u, g));
    });
  for (const auto& s : probe.one_cells)
    tasks.push_back([&u, &s] {
      GrothSlice1 g = lift_to_groth(s);
      return expect_equal("laxslice-solved-1cell", s.sigma->name, laxslice_to_fibre(g),
                          laxslice_to_fibre_solved(u, g));
    });
  for (const auto& a : probe.two_cells)
    tasks.push_back([&u, &a] {
      GrothSlice2 g = lift_to_groth(a);
      return expect_equal("laxslice-solved-2cell", a.alpha->name, laxslice_to_fibre(g),
                          laxslice_to_fibre_solved(u, g));
    });
  return merge_all(run_parallel(tasks));
}

}  // namespace basechange
