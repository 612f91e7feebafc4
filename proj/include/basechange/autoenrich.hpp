#pragma once

#include <vector>

#include "basechange/chbase.hpp"

namespace basechange {

// uV, cached per base.
Ptr<SymMonClosedVCat> autoenrich(Ptr<Smcc> v);

// G̀ : G_*uV → uW with structure cells the names of e^G and m^G.
MonVFunctor grave(Ptr<MonoidalFunctor> G);
// ᾰ : G̀ ⇒ H̀ ∘ α_*, components the names of α.
MonVNatTrans grave_nat(Ptr<MonoidalNatTrans> a);

// uM(−,−) : M^op ⊗ M → M built from the closure data.
VFunctor internal_hom_vfunctor(const SymMonClosedVCat& m);

// A V-category B superposed on a: B(−,−) : a^op ⊗ a → uV plus ∘ and j.
struct SuperposedVCat {
  Ptr<VCat> a;
  VFunctor homB;
  std::vector<int> comp;  // ∘_{ABC}, indexed like VCat::comp
  std::vector<int> unit;  // j_A

  VCat as_vcat() const;
  int hB(int A, int B) const { return homB.ob(A * a->n() + B); }
  // •_{(AB)C} : B(A,B)⊗a(B,C) → B(A,C)
  int act_right(int A, int B, int C) const;
  // •_{A(BC)} : a(A,B)⊗B(B,C) → B(A,C)
  int act_left(int A, int B, int C) const;
};

LawReport check_superposed(const SuperposedVCat& b);
// S_{AB} = •_{(AA)B}∘(j_A⊗1)∘ℓ⁻¹ and the variant •_{A(BB)}∘(1⊗j_B)∘r⁻¹.
VFunctor superposed_inclusion(const SuperposedVCat& b, Ptr<VCat> target);
VFunctor superposed_inclusion_right(const SuperposedVCat& b, Ptr<VCat> target);
// The superposition U^M_* uM on M.
SuperposedVCat reconstruction_superposition(Ptr<SymMonClosedVCat> m);
// M(A,B) → M(A⊗I,B) ≅ M(I,[A,B]).
std::vector<int> canonical_isos(const SymMonClosedVCat& m);

struct Reconstruction {
  Ptr<SymMonClosedVCat> m;
  Ptr<SymMonClosedVCat> pushed;  // U^M_* uM
  MonVFunctor S;                 // M → U^M_* uM
  MonVFunctor S_inv;
  LawReport report;
};
Reconstruction reconstruct_iso(Ptr<SymMonClosedVCat> m);

// θ^{U^M} at the ordinary level sends each f : J → x to itself.
LawReport check_theta_normalization_identity(Ptr<SymMonClosedVCat> m);

LawReport check_fundamental_lemma(Ptr<MonVFunctor> G, bool monoidal);
// Ǵ_0 ∘ K^G = G, as plain and as monoidal functors.
LawReport check_recovery_triangle(Ptr<MonoidalFunctor> G);

struct AutoenrichProbe {
  std::vector<Ptr<MonoidalFunctor>> functors;
  std::vector<Ptr<MonoidalNatTrans>> cells;
};
// Malformed inputs are reported under "functor <id>/" or "cell <id>/" and stop the check.
LawReport check_autoenrichment_2functor(const AutoenrichProbe& probe);

}  // namespace basechange
