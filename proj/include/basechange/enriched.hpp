#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "basechange/smcc.hpp"

namespace basechange {

// c_{ABC} : hom(A,B)⊗hom(B,C) → hom(A,C), j_A : I → hom(A,A).
struct VCat {
  std::string name;
  Ptr<Smcc> base;
  std::vector<std::string> obj;
  std::vector<int> hom;   // [A*n+B]
  std::vector<int> comp;  // [(A*n+B)*n+C]
  std::vector<int> unit;  // [A]
  // Set on the autoenrichment of `self_of`; its underlying category then
  // reuses the base ids.
  Ptr<Smcc> self_of;

  int n() const { return static_cast<int>(obj.size()); }
  int h(int A, int B) const { return hom[A * n() + B]; }
  int c(int A, int B, int C) const { return comp[(A * n() + B) * n() + C]; }
  int j(int A) const { return unit[A]; }
  int o(const std::string& id) const;
};

bool same_vcat(const VCat& a, const VCat& b);
LawReport check_vcat(const VCat& a);

// Arithmetic on names (arrows I → hom(A,B)) of a V-category.
int name_comp(const VCat& a, int A, int B, int C, int g, int f);  // g after f
// hom(B,X) → hom(A,X) induced by the name f : I → hom(A,B)
int precompose(const VCat& a, int f, int A, int B, int X);
// hom(A,X) → hom(A,Y) induced by the name g : I → hom(X,Y)
int postcompose(const VCat& a, int g, int X, int Y, int A);

struct VFunctor {
  Ptr<VCat> src, dst;
  std::vector<int> omap;
  std::vector<int> hmap;  // [A*n+B] : hom(A,B) → hom(FA,FB)

  int ob(int A) const { return omap[A]; }
  int hm(int A, int B) const { return hmap[A * src->n() + B]; }
  int on_name(int A, int B, int nm) const { return src->base->comp(hm(A, B), nm); }
};

bool operator==(const VFunctor& a, const VFunctor& b);
LawReport check_vfunctor(const VFunctor& F);
VFunctor identity_vfunctor(Ptr<VCat> a);
VFunctor compose(const VFunctor& G, const VFunctor& F);  // G∘F

struct VNatTrans {
  VFunctor src, dst;
  std::vector<int> comp;  // names I → hom(FA, GA)
};

LawReport check_vnat(const VNatTrans& t);
VNatTrans identity_vnat(const VFunctor& F);
VNatTrans vcomp(const VNatTrans& b, const VNatTrans& a);
VNatTrans whisker_right(const VNatTrans& a, const VFunctor& F);  // aF
VNatTrans whisker_left(const VFunctor& H, const VNatTrans& a);   // Ha

// Object (A,B) of a⊗b sits at A * b.n() + B.
VCat tensor_vcat(const VCat& a, const VCat& b);
VCat unit_vcat(Ptr<Smcc> v);
VCat opposite_vcat(const VCat& a);

// Underlying ordinary category. Morphisms A → B are the names I → hom(A,B);
// on an autoenrichment with identify set they keep the base ids and order.
struct Underlying {
  Ptr<FinCat> cat;
  std::vector<int> name;                    // per morphism
  std::map<std::array<int, 3>, int> index;  // (A, B, name) ↦ morphism
  int of(int A, int B, int nm) const;       // throws when absent
};
Underlying underlying(const VCat& a, bool identify = true);
FinCat underlying_cat(const VCat& a);

VFunctor tensor_vfunctor(const VFunctor& F, const VFunctor& G, Ptr<VCat> src, Ptr<VCat> dst);
VFunctor sym_vfunctor(const VCat& a, const VCat& b, Ptr<VCat> ab, Ptr<VCat> ba);  // a⊗b → b⊗a

// Autoenrichment as a bare V-category (cached per base).
Ptr<VCat> self_enriched(Ptr<Smcc> v);
// hom(−,−) : a^op ⊗ a → u(base)
VFunctor hom_vfunctor(Ptr<VCat> a);

// Right adjoint to M⊗(−) for one object M.
struct Closure {
  std::vector<int> rmap;    // P ↦ [M,P]
  std::vector<int> rhom;    // [P*n+P'] : hom(P,P') → hom([M,P],[M,P'])
  std::vector<int> unit;    // η_N : I → hom(N, [M, M⊗N])
  std::vector<int> counit;  // ε_P : I → hom(M⊗[M,P], P)
};

struct SymMonClosedVCat {
  std::string name;
  Ptr<VCat> m;
  Ptr<VCat> mm;  // m⊗m
  VFunctor tensor;
  int unit_obj = -1;
  std::vector<int> a, l, r, s;  // names, indexed like the base tables
  std::vector<Closure> closure;

  const Smcc& base() const { return *m->base; }
  int n() const { return m->n(); }
  int ten(int x, int y) const { return tensor.omap[x * n() + y]; }
  int A(int x, int y, int z) const { return a[(x * n() + y) * n() + z]; }
  int L(int x) const { return l[x]; }
  int R(int x) const { return r[x]; }
  int S(int x, int y) const { return s[x * n() + y]; }
  int ihom(int x, int y) const { return closure[x].rmap[y]; }
};

// names[i] : I → hom(objs[i], objs[i+1]); returns the composite name.
int name_path(const VCat& a, const std::vector<int>& objs, const std::vector<int>& names);
// Names in the underlying monoidal category of a SymMonClosedVCat.
int name_tensor(const SymMonClosedVCat& m, int A, int A2, int B, int B2, int f, int g);
// Inverse name of f : I → hom(A,B), or -1.
int name_inverse(const VCat& a, int A, int B, int f);

VFunctor left_tensor_vfunctor(const SymMonClosedVCat& m, int M);  // M⊗(−)
VFunctor closure_vfunctor(const SymMonClosedVCat& m, int M);      // [M,−]
LawReport check_symmonclosed(const SymMonClosedVCat& m);
bool same_symmonclosed(const SymMonClosedVCat& a, const SymMonClosedVCat& b);

// Underlying symmetric monoidal closed category. With identify set, the
// autoenrichment of v returns v itself.
Ptr<Smcc> underlying_smcc(const SymMonClosedVCat& m, bool identify = true);

// e : I → hom(I_N, F I_M), m : I → hom(Fx⊗Fy, F(x⊗y)), all names.
struct MonVFunctor {
  std::string name;
  Ptr<SymMonClosedVCat> src, dst;
  VFunctor F;
  int e = -1;
  std::vector<int> m;
  bool symmetric = true;

  int ob(int x) const { return F.omap[x]; }
  int M(int x, int y) const { return m[x * src->n() + y]; }
};

LawReport check_monvfunctor(const MonVFunctor& S);
bool monv_satisfies_symmetry(const MonVFunctor& S);
bool is_strict(const MonVFunctor& S);
MonVFunctor identity_monvfunctor(Ptr<SymMonClosedVCat> m);
MonVFunctor compose(const MonVFunctor& T, const MonVFunctor& S);  // T∘S
bool operator==(const MonVFunctor& a, const MonVFunctor& b);

struct MonVNatTrans {
  std::string name;
  Ptr<MonVFunctor> src, dst;
  std::vector<int> comp;  // names I → hom(Sx, Tx)
};

LawReport check_monvnat(const MonVNatTrans& t);
VNatTrans as_vnat(const MonVNatTrans& t);
MonVNatTrans identity_monvnat(Ptr<MonVFunctor> S);
MonVNatTrans vcomp(const MonVNatTrans& b, const MonVNatTrans& a);
MonVNatTrans whisker_right(const MonVNatTrans& a, Ptr<MonVFunctor> F);
MonVNatTrans whisker_left(Ptr<MonVFunctor> H, const MonVNatTrans& a);
bool operator==(const MonVNatTrans& a, const MonVNatTrans& b);

// Underlying ordinary data, landing in the given underlying Smccs.
MonoidalFunctor underlying_monoidal(const MonVFunctor& S, Ptr<Smcc> src0, Ptr<Smcc> dst0);
MonoidalNatTrans underlying_monoidal_nat(const MonVNatTrans& t, Ptr<MonoidalFunctor> S0,
                                         Ptr<MonoidalFunctor> T0);

}  // namespace basechange
