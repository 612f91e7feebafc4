#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "basechange/fincat.hpp"

namespace basechange {

// Finite commutative quantale: carrier, order (closed reflexively and
// transitively on build), full multiplication table, unit.
struct QuantaleDesc {
  std::string name;
  std::vector<std::string> carrier;
  std::vector<std::pair<std::string, std::string>> leq;
  std::map<std::pair<std::string, std::string>, std::string> mult;
  std::string unit;
};

struct CommMonoidDesc {
  std::string name;
  std::vector<std::string> elements;
  std::map<std::pair<std::string, std::string>, std::string> mult;
  std::string unit;
};

// Conventions: a : (x⊗y)⊗z → x⊗(y⊗z), l : I⊗x → x, r : x⊗I → x,
// s : x⊗y → y⊗x, ev : x⊗[x,y] → y, transpose : Hom(A⊗B,C) → Hom(B,[A,C]).
struct Smcc {
  std::string name;
  Ptr<FinCat> cat;
  Ptr<FinCat> sq;
  FinFunctor tensor;  // sq → cat
  int unit = -1;
  std::vector<int> a, l, r, s;
  std::vector<int> ihom, ev;
  std::map<std::array<int, 3>, int> tr;  // (A, B, f) ↦ f̂

  std::vector<int> inv_;  // filled by finalize_smcc

  int n() const { return cat->no(); }
  int nm() const { return cat->nm(); }
  const FinCat& C() const { return *cat; }
  int dom(int f) const { return cat->dom[f]; }
  int cod(int f) const { return cat->cod[f]; }
  int id(int x) const { return cat->ident[x]; }
  int ten(int x, int y) const { return tensor.omap[x * n() + y]; }
  int tenm(int f, int g) const { return tensor.mmap[f * nm() + g]; }
  int comp(int g, int f) const { return cat->compose(g, f); }
  // Diagrammatic composite: path({f, g, h}) = h∘g∘f.
  int path(std::initializer_list<int> fs) const;
  int inv(int f) const;

  int A(int x, int y, int z) const { return a[(x * n() + y) * n() + z]; }
  int L(int x) const { return l[x]; }
  int R(int x) const { return r[x]; }
  int S(int x, int y) const { return s[x * n() + y]; }
  int H(int x, int y) const { return ihom[x * n() + y]; }
  int Ev(int x, int y) const { return ev[x * n() + y]; }

  int transpose(int A, int B, int f) const;
  int untranspose(int A, int C, int g) const;  // Ev∘(1_A⊗g)
  // [f] : I → [x,y] for f : x → y
  int name_of(int f) const;
  int unname(int x, int y, int nm) const;
  // (x⊗y)⊗(z⊗w) → (x⊗z)⊗(y⊗w)
  int interchange(int x, int y, int z, int w) const;
  // I → I⊗I
  int lI_inv() const { return inv(L(unit)); }
};

void finalize_smcc(Smcc& v);
bool same_smcc(const Smcc& a, const Smcc& b);

Smcc quantale_to_smcc(const QuantaleDesc& q);
Smcc monoid_to_smcc(const CommMonoidDesc& m);
LawReport check_smcc(const Smcc& v);

// Named instances used across tests and the bundle.
QuantaleDesc quantale_B2();
QuantaleDesc quantale_G3();
QuantaleDesc quantale_L3();
CommMonoidDesc monoid_trivial();
CommMonoidDesc monoid_cyclic(int order);

struct MonoidalFunctor {
  std::string name;
  Ptr<Smcc> src, dst;
  FinFunctor F;
  int e = -1;
  std::vector<int> m;  // m[x*n+y] : Fx⊗Fy → F(x⊗y)
  bool symmetric = true;

  int ob(int x) const { return F.omap[x]; }
  int mo(int f) const { return F.mmap[f]; }
  int M(int x, int y) const { return m[x * src->n() + y]; }
};

LawReport check_monoidal_functor(const MonoidalFunctor& F);
bool satisfies_symmetry(const MonoidalFunctor& F);
bool is_strong(const MonoidalFunctor& F);
bool is_strict(const MonoidalFunctor& F);
MonoidalFunctor identity_monoidal(Ptr<Smcc> v);
MonoidalFunctor compose(const MonoidalFunctor& H, const MonoidalFunctor& G);  // H∘G
bool operator==(const MonoidalFunctor& a, const MonoidalFunctor& b);

struct MonoidalNatTrans {
  std::string name;
  Ptr<MonoidalFunctor> src, dst;
  std::vector<int> comp;
  int at(int x) const { return comp[x]; }
};

LawReport check_monoidal_nat(const MonoidalNatTrans& t);
MonoidalNatTrans identity_monoidal_nat(Ptr<MonoidalFunctor> F);
MonoidalNatTrans vcomp(const MonoidalNatTrans& b, const MonoidalNatTrans& a);  // b·a
MonoidalNatTrans whisker_right(const MonoidalNatTrans& a, Ptr<MonoidalFunctor> F);  // aF
MonoidalNatTrans whisker_left(Ptr<MonoidalFunctor> H, const MonoidalNatTrans& a);   // Ha
bool operator==(const MonoidalNatTrans& a, const MonoidalNatTrans& b);

// Thin bases: the unique monoidal functor with the given object map, if any.
MonoidalFunctor thin_monoidal_functor(std::string name, Ptr<Smcc> src, Ptr<Smcc> dst,
                                      const std::vector<int>& omap);
// Thin target: the unique transformation between parallel functors, if any.
MonoidalNatTrans thin_monoidal_nat(std::string name, Ptr<MonoidalFunctor> F,
                                   Ptr<MonoidalFunctor> G);
// Monoid bases: functor from a homomorphism table.
MonoidalFunctor monoid_hom_functor(std::string name, Ptr<Smcc> src, Ptr<Smcc> dst,
                                   const std::vector<int>& mmap);

}  // namespace basechange
