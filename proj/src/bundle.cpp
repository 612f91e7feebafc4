#include "basechange/bundle.hpp"

#include <array>
#include <map>

#include "basechange/autoenrich.hpp"
#include "bundle_text.hpp"

namespace basechange {

namespace {

template <class T>
Ptr<T> share(T v) {
  return std::make_shared<const T>(std::move(v));
}

bool is_thin(const Smcc& v) {
  for (const auto& h : v.C().homs)
    if (h.size() > 1) return false;
  return true;
}

int unique_mor(const Smcc& v, int x, int y) {
  const auto& h = v.C().hom(x, y);
  return h.size() == 1 ? h[0] : -1;
}

class Builder {
 public:
  Bundle out;

  void run(const InstanceFile& f) {
    for (const Record& r : f.records) {
      line_ = r.line;
      if (r.kind == "#") continue;
      try {
        dispatch(r);
      } catch (const ParseError&) {
        throw;
      } catch (const StructuralError& e) {
        std::string msg = e.what();
        if (msg.rfind("line ", 0) == 0) throw;
        throw StructuralError("line " + std::to_string(line_) + ": " + r.kind + " " + r.head[0] + ": " + msg);
      }
    }
  }

 private:
  int line_ = 0;
  std::map<std::string, QuantaleDesc> quantales_;
  std::map<std::string, CommMonoidDesc> monoids_;
  std::map<std::string, Ptr<Smcc>> bases_;
  std::map<std::string, Ptr<MonoidalFunctor>> functors_;
  std::map<std::string, Ptr<MonoidalNatTrans>> cells_;
  std::map<std::string, Ptr<SymMonClosedVCat>> monvcats_;

  [[noreturn]] void fail(const std::string& msg) const { throw StructuralError("line " + std::to_string(line_) + ": " + msg); }

  template <class M>
  auto lookup(const M& m, const std::string& id, const char* what) const {
    auto it = m.find(id);
    if (it == m.end()) fail("unknown " + std::string(what) + " id '" + id + "'");
    return it->second;
  }

  void arity(const Record& r, std::size_t n) const {
    if (r.head.size() != n) fail(r.kind + " expects " + std::to_string(n - 1) + " arguments after the id");
  }

  void body_arity(const Record& r, std::size_t i, std::size_t n) {
    line_ = r.body_lines[i];
    if (r.body[i].size() != n) fail("'" + r.body[i][0] + "' expects " + std::to_string(n - 1) + " arguments");
  }

  void dispatch(const Record& r) {
    const std::string& id = r.head[0];
    if (r.kind == "quantale") return quantale(r);
    if (r.kind == "monoid") return monoid(r);
    if (r.kind == "category") return category(r);
    if (r.kind == "smcc") return smcc(r);
    if (r.kind == "functor") return functor(r);
    if (r.kind == "nat") return nat(r);
    if (r.kind == "compose") {
      arity(r, 3);
      MonoidalFunctor gf = compose(*lookup(functors_, r.head[1], "functor"), *lookup(functors_, r.head[2], "functor"));
      gf.name = id;
      return add_functor(id, share(std::move(gf)));
    }
    if (r.kind == "identity") {
      arity(r, 2);
      if (bases_.count(r.head[1])) {
        MonoidalFunctor f = identity_monoidal(bases_[r.head[1]]);
        f.name = id;
        return add_functor(id, share(std::move(f)));
      }
      MonoidalNatTrans t = identity_monoidal_nat(lookup(functors_, r.head[1], "smcc or functor"));
      t.name = id;
      return add_cell(id, share(std::move(t)));
    }
    if (r.kind == "vcomp") {
      arity(r, 3);
      auto b = lookup(cells_, r.head[1], "nat");
      auto a = lookup(cells_, r.head[2], "nat");
      if (!(*a->dst == *b->src)) fail("vcomp " + id + ": " + r.head[2] + " does not end where " + r.head[1] + " starts");
      MonoidalNatTrans t = vcomp(*b, *a);
      t.name = id;
      return add_cell(id, share(std::move(t)));
    }
    if (r.kind == "vcat") return vcat(r);
    if (r.kind == "monvcat") return monvcat(r);
    if (r.kind == "base_index") return base_index(r);
    if (r.kind == "adjunction") return adjunction(r);
    fail("unhandled kind " + r.kind);
  }

  void quantale(const Record& r) {
    arity(r, 1);
    QuantaleDesc q;
    q.name = r.head[0];
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      const auto& b = r.body[i];
      line_ = r.body_lines[i];
      if (b[0] == "carrier") q.carrier.assign(b.begin() + 1, b.end());
      else if (b[0] == "leq") body_arity(r, i, 3), q.leq.push_back({b[1], b[2]});
      else if (b[0] == "mult") body_arity(r, i, 4), q.mult[{b[1], b[2]}] = b[3];
      else if (b[0] == "unit") body_arity(r, i, 2), q.unit = b[1];
      else fail("unknown quantale field '" + b[0] + "'");
    }
    quantales_[q.name] = q;
  }

  // Composites with an identity may be left out; every other composable pair
  // needs a comp line. Explicit lines win, so a wrong one is reported by
  // check_category rather than silently repaired.
  void category(const Record& r) {
    arity(r, 1);
    CatBuilder cb(r.head[0]);
    std::map<std::string, int> obj, mor;
    std::vector<int> ident;
    std::vector<std::array<std::string, 3>> comps;
    auto find = [&](const std::map<std::string, int>& m, const std::string& id, const char* what) {
      auto it = m.find(id);
      if (it == m.end()) fail("unknown " + std::string(what) + " '" + id + "' in category " + r.head[0]);
      return it->second;
    };
    auto add_mor = [&](const std::string& id, int d, int c) {
      if (mor.count(id)) fail("morphism '" + id + "' declared twice in category " + r.head[0]);
      return mor[id] = cb.morphism(id, d, c);
    };
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      const auto& b = r.body[i];
      line_ = r.body_lines[i];
      if (b[0] == "objects") {
        for (std::size_t k = 1; k < b.size(); ++k) obj[b[k]] = cb.object(b[k]);
        ident.assign(obj.size(), -1);
      } else if (b[0] == "identity") {
        body_arity(r, i, 3);
        int x = find(obj, b[1], "object");
        ident[x] = add_mor(b[2], x, x);
        cb.identity(x, ident[x]);
      } else if (b[0] == "mor") {
        body_arity(r, i, 4);
        add_mor(b[1], find(obj, b[2], "object"), find(obj, b[3], "object"));
      } else if (b[0] == "comp") {
        body_arity(r, i, 4);
        comps.push_back({b[1], b[2], b[3]});
      } else {
        fail("unknown category field '" + b[0] + "'");
      }
    }
    line_ = r.line;
    for (std::size_t x = 0; x < ident.size(); ++x)
      if (ident[x] < 0) fail("category " + r.head[0] + " declares no identity for object " + cb.raw().obj[x]);
    const std::vector<int> dom = cb.raw().dom, cod = cb.raw().cod;
    for (int f = 0; f < static_cast<int>(dom.size()); ++f) {
      cb.set_comp(ident[cod[f]], f, f);
      cb.set_comp(f, ident[dom[f]], f);
    }
    for (const auto& [g, f, gf] : comps)
      cb.set_comp(find(mor, g, "morphism"), find(mor, f, "morphism"), find(mor, gf, "morphism"));
    out.categories.push_back(share(cb.build()));
  }

  void monoid(const Record& r) {
    arity(r, 1);
    CommMonoidDesc m;
    m.name = r.head[0];
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      const auto& b = r.body[i];
      line_ = r.body_lines[i];
      if (b[0] == "elements") m.elements.assign(b.begin() + 1, b.end());
      else if (b[0] == "mult") body_arity(r, i, 4), m.mult[{b[1], b[2]}] = b[3];
      else if (b[0] == "unit") body_arity(r, i, 2), m.unit = b[1];
      else fail("unknown monoid field '" + b[0] + "'");
    }
    monoids_[m.name] = m;
  }

  void smcc(const Record& r) {
    arity(r, 3);
    Smcc v;
    if (r.head[1] == "quantale") v = quantale_to_smcc(lookup(quantales_, r.head[2], "quantale"));
    else if (r.head[1] == "monoid") v = monoid_to_smcc(lookup(monoids_, r.head[2], "monoid"));
    else fail("smcc source must be 'quantale' or 'monoid', not '" + r.head[1] + "'");
    v.name = r.head[0];
    auto p = share(std::move(v));
    bases_[r.head[0]] = p;
    out.bases.push_back(p);
  }

  void add_functor(const std::string& id, Ptr<MonoidalFunctor> f) {
    if (!functors_.emplace(id, f).second) fail("duplicate functor id '" + id + "'");
    out.functors.push_back(f);
  }

  void add_cell(const std::string& id, Ptr<MonoidalNatTrans> t) {
    if (!cells_.emplace(id, t).second) fail("duplicate nat id '" + id + "'");
    out.cells.push_back(t);
  }

  void functor(const Record& r) {
    arity(r, 3);
    auto src = lookup(bases_, r.head[1], "smcc");
    auto dst = lookup(bases_, r.head[2], "smcc");
    const FinCat& S = src->C();
    const FinCat& D = dst->C();
    std::vector<int> omap(S.no(), D.no() == 1 ? 0 : -1), mmap(S.nm(), -1);
    int e = -2;
    std::map<std::pair<int, int>, int> m;
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      const auto& b = r.body[i];
      line_ = r.body_lines[i];
      if (b[0] == "ob") body_arity(r, i, 3), omap[S.o(b[1])] = D.o(b[2]);
      else if (b[0] == "mor") body_arity(r, i, 3), mmap[S.m(b[1])] = D.m(b[2]);
      else if (b[0] == "e") body_arity(r, i, 2), e = D.m(b[1]);
      else if (b[0] == "m") body_arity(r, i, 4), m[{S.o(b[1]), S.o(b[2])}] = D.m(b[3]);
      else fail("unknown functor field '" + b[0] + "'");
    }
    line_ = r.line;
    for (int x = 0; x < S.no(); ++x)
      if (omap[x] < 0) fail("functor " + r.head[0] + " has no image for object " + S.obj[x]);
    MonoidalFunctor F;
    if (is_thin(*dst)) {
      F = thin_monoidal_functor(r.head[0], src, dst, omap);
    } else {
      for (int f = 0; f < S.nm(); ++f)
        if (mmap[f] < 0) fail("functor " + r.head[0] + " has no image for morphism " + S.mor[f]);
      F.name = r.head[0];
      F.src = src;
      F.dst = dst;
      F.F = {src->cat, dst->cat, omap, mmap};
      F.e = e >= 0 ? e : unique_or_identity(*dst, dst->unit, omap[src->unit]);
      for (int x = 0; x < S.no(); ++x)
        for (int y = 0; y < S.no(); ++y) {
          auto it = m.find({x, y});
          F.m.push_back(it != m.end() ? it->second
                                      : unique_or_identity(*dst, dst->ten(omap[x], omap[y]), omap[src->ten(x, y)]));
        }
    }
    add_functor(r.head[0], share(std::move(F)));
  }

  int unique_or_identity(const Smcc& v, int x, int y) const {
    if (x == y) return v.id(x);
    int f = unique_mor(v, x, y);
    if (f < 0) fail("structure morphism needs an explicit entry");
    return f;
  }

  void nat(const Record& r) {
    arity(r, 3);
    auto F = lookup(functors_, r.head[1], "functor");
    auto G = lookup(functors_, r.head[2], "functor");
    if (r.body.empty() && is_thin(*F->dst)) return add_cell(r.head[0], share(thin_monoidal_nat(r.head[0], F, G)));
    MonoidalNatTrans t;
    t.name = r.head[0];
    t.src = F;
    t.dst = G;
    t.comp.assign(F->src->n(), -1);
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      const auto& b = r.body[i];
      line_ = r.body_lines[i];
      if (b[0] != "at") fail("unknown nat field '" + b[0] + "'");
      body_arity(r, i, 3);
      t.comp[F->src->C().o(b[1])] = F->dst->C().m(b[2]);
    }
    line_ = r.line;
    for (int x = 0; x < F->src->n(); ++x)
      if (t.comp[x] < 0) fail("nat " + r.head[0] + " has no component at " + F->src->C().obj[x]);
    add_cell(r.head[0], share(std::move(t)));
  }

  void vcat(const Record& r) {
    arity(r, 2);
    auto V = lookup(bases_, r.head[1], "smcc");
    VCat a;
    a.name = r.head[0];
    a.base = V;
    std::map<std::pair<int, int>, int> hom;
    std::map<std::array<int, 3>, int> comp;
    std::map<int, int> unit;
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      const auto& b = r.body[i];
      line_ = r.body_lines[i];
      if (b[0] == "objects") {
        a.obj.assign(b.begin() + 1, b.end());
      } else if (b[0] == "hom") {
        body_arity(r, i, 4);
        hom[{a.o(b[1]), a.o(b[2])}] = V->C().o(b[3]);
      } else if (b[0] == "comp") {
        body_arity(r, i, 5);
        comp[{a.o(b[1]), a.o(b[2]), a.o(b[3])}] = V->C().m(b[4]);
      } else if (b[0] == "unit") {
        body_arity(r, i, 3);
        unit[a.o(b[1])] = V->C().m(b[2]);
      } else {
        fail("unknown vcat field '" + b[0] + "'");
      }
    }
    line_ = r.line;
    const int n = a.n();
    for (int A = 0; A < n; ++A)
      for (int B = 0; B < n; ++B) {
        auto it = hom.find({A, B});
        if (it == hom.end()) fail("vcat " + a.name + " has no hom(" + a.obj[A] + "," + a.obj[B] + ")");
        a.hom.push_back(it->second);
      }
    // composition and units default to the unique morphism over a thin base
    for (int A = 0; A < n; ++A)
      for (int B = 0; B < n; ++B)
        for (int C = 0; C < n; ++C) {
          auto it = comp.find({A, B, C});
          int f = it != comp.end() ? it->second : unique_mor(*V, V->ten(a.h(A, B), a.h(B, C)), a.h(A, C));
          if (f < 0) fail("vcat " + a.name + " has no composition at (" + a.obj[A] + "," + a.obj[B] + "," + a.obj[C] + ")");
          a.comp.push_back(f);
        }
    for (int A = 0; A < n; ++A) {
      auto it = unit.find(A);
      int f = it != unit.end() ? it->second : unique_mor(*V, V->unit, a.h(A, A));
      if (f < 0) fail("vcat " + a.name + " has no unit at " + a.obj[A]);
      a.unit.push_back(f);
    }
    out.vcats.push_back(share(std::move(a)));
  }

  void monvcat(const Record& r) {
    Ptr<SymMonClosedVCat> m;
    if (r.head.size() == 3 && r.head[1] == "autoenrich") {
      m = autoenrich(lookup(bases_, r.head[2], "smcc"));
    } else if (r.head.size() == 4 && r.head[1] == "push") {
      auto G = lookup(functors_, r.head[2], "functor");
      auto a = lookup(monvcats_, r.head[3], "monvcat");
      if (!same_smcc(*G->src, a->base())) fail("push along " + r.head[2] + ": " + r.head[3] + " lies over another base");
      SymMonClosedVCat copy = *push_monvcat(*G, *a);
      copy.name = r.head[0];
      m = share(std::move(copy));
    } else {
      fail("monvcat expects 'autoenrich <smcc>' or 'push <functor> <monvcat>'");
    }
    if (!monvcats_.emplace(r.head[0], m).second) fail("duplicate monvcat id '" + r.head[0] + "'");
    out.monvcats.push_back(m);
  }

  void base_index(const Record& r) {
    arity(r, 1);
    BaseIndex idx;
    bool close = false;
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      const auto& b = r.body[i];
      line_ = r.body_lines[i];
      if (b[0] == "bases") {
        for (std::size_t k = 1; k < b.size(); ++k) idx.bases.push_back(lookup(bases_, b[k], "smcc"));
      } else if (b[0] == "functors") {
        for (std::size_t k = 1; k < b.size(); ++k) idx.functors.push_back(lookup(functors_, b[k], "functor"));
      } else if (b[0] == "cells") {
        for (std::size_t k = 1; k < b.size(); ++k) idx.cells.push_back(lookup(cells_, b[k], "nat"));
      } else if (b[0] == "object") {
        body_arity(r, i, 3);
        auto v = lookup(bases_, b[1], "smcc");
        auto m = lookup(monvcats_, b[2], "monvcat");
        if (!same_smcc(*v, m->base())) fail("object " + b[2] + " does not lie over " + b[1]);
        idx.objects.push_back({v, m});
      } else if (b[0] == "close") {
        body_arity(r, i, 1);
        close = true;
      } else {
        fail("unknown base_index field '" + b[0] + "'");
      }
    }
    out.indices.push_back({r.head[0], close ? close_base_index(idx) : idx});
  }

  void adjunction(const Record& r) {
    arity(r, 1);
    OrdinaryAdjunction a;
    a.name = r.head[0];
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      const auto& b = r.body[i];
      body_arity(r, i, 2);
      if (b[0] == "left") a.F = lookup(functors_, b[1], "functor");
      else if (b[0] == "right") a.G = lookup(functors_, b[1], "functor");
      else if (b[0] == "unit") a.eta = lookup(cells_, b[1], "nat");
      else if (b[0] == "counit") a.eps = lookup(cells_, b[1], "nat");
      else fail("unknown adjunction field '" + b[0] + "'");
    }
    line_ = r.line;
    if (!a.F || !a.G || !a.eta || !a.eps) fail("adjunction " + a.name + " needs left, right, unit and counit");
    out.adjunctions.push_back(a);
  }
};

template <class V>
auto find_named(const V& v, const std::string& id, const char* what) {
  for (const auto& p : v)
    if (p->name == id) return p;
  throw StructuralError(std::string("unknown ") + what + " id '" + id + "'");
}

}  // namespace

Ptr<Smcc> Bundle::base(const std::string& id) const { return find_named(bases, id, "smcc"); }
Ptr<MonoidalFunctor> Bundle::functor(const std::string& id) const { return find_named(functors, id, "functor"); }
Ptr<MonoidalNatTrans> Bundle::cell(const std::string& id) const { return find_named(cells, id, "nat"); }
Ptr<SymMonClosedVCat> Bundle::monvcat(const std::string& id) const {
  return find_named(monvcats, id, "monvcat");
}

Bundle build_bundle(const InstanceFile& f) {
  Builder b;
  b.run(f);
  return std::move(b.out);
}

Bundle load_bundle(const std::string& path) { return build_bundle(parse_instance(read_text_file(path))); }

const std::string& bundled_text() {
  static const std::string text = kBundleText;
  return text;
}

const Bundle& bundled() {
  static const Bundle b = build_bundle(parse_instance(bundled_text()));
  return b;
}

std::vector<Ptr<MonVFunctor>> enriched_one_cells(const Bundle& b) {
  std::vector<Ptr<MonVFunctor>> out;
  for (const auto& v : b.bases) {
    MonVFunctor id = identity_monvfunctor(autoenrich(v));
    id.name = "1_u" + v->name;
    out.push_back(share(std::move(id)));
  }
  for (const auto& k : b.functors)
    if (k->symmetric) {
      MonVFunctor g = grave(k);
      g.name = "grave(" + k->name + ")";
      out.push_back(share(std::move(g)));
    }
  return out;
}

std::vector<Ptr<MonVFunctor>> normalization_targets(const Bundle& b) {
  std::vector<Ptr<MonVFunctor>> out;
  for (const auto& m : b.monvcats) {
    MonVFunctor U = canonical_normalization(m);
    U.name = "U^" + m->name;
    out.push_back(share(std::move(U)));
  }
  for (const auto& k : b.functors)
    if (k->symmetric) {
      MonVFunctor g = grave(k);
      g.name = "grave(" + k->name + ")";
      out.push_back(share(std::move(g)));
    }
  return out;
}

AutoenrichProbe autoenrich_probe(const Bundle& b) { return {b.functors, b.cells}; }

SliceProbe slice_probe(const OrdinaryAdjunction& a) {
  SliceAdjunction s = laxslice_adjunction(a);
  SliceProbe p;
  p.objects = {s.F.src, s.F.dst};
  Slice1 idV = slice_identity(s.F.src), idM = slice_identity(s.F.dst);
  p.one_cells = {s.F, s.G, slice_compose(s.G, s.F), slice_compose(s.F, s.G), idV, idM};
  p.two_cells = {s.eta, s.eps};
  for (const Slice1& c : p.one_cells) {
    MonoidalNatTrans one = identity_monoidal_nat(c.s);
    one.name = "1_" + c.s->name;
    p.two_cells.push_back({c, c, share(std::move(one))});
  }
  return p;
}

}  // namespace basechange
