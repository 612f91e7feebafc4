#pragma once

#include <string>
#include <vector>

#include "basechange/groth.hpp"

namespace basechange {

// Each 2-category gets its own adjunction type, so cells of different
// contexts cannot meet in one composite.

// F ⊣ G : M → V in SMCCAT: F : V → M, η : 1_V ⇒ GF, ε : FG ⇒ 1_M.
struct OrdinaryAdjunction {
  std::string name;
  Ptr<MonoidalFunctor> F, G;
  Ptr<MonoidalNatTrans> eta, eps;
};

// The same shape in eSMCCAT_V.
struct EnrichedAdjunction {
  std::string name;
  Ptr<MonVFunctor> F, G;
  Ptr<MonVNatTrans> eta, eps;
};

// The same shape in the lax slice SMCCAT⫽V.
struct SliceAdjunction {
  std::string name;
  Slice1 F, G;
  Slice2 eta, eps;
};

// Throws StructuralError when the four cells do not form an adjunction
// shape; bad cells and triangle failures land in the report.
LawReport check_adjunction(const OrdinaryAdjunction& a);
LawReport check_adjunction(const EnrichedAdjunction& a);
LawReport check_adjunction(const SliceAdjunction& a);

OrdinaryAdjunction identity_adjunction(Ptr<Smcc> v);

// (F,η) ⊣ (G,1_G) : (M,G) → (V,1_V).
SliceAdjunction laxslice_adjunction(const OrdinaryAdjunction& a);

// Transposition under F_* ⊣ G_*. H : F_*X → Y gives G_*(H)∘η_*X : X → G_*Y;
// K : X → G_*Y gives ε_*Y∘F_*(K) : F_*X → Y. 2-cells likewise.
MonVFunctor transpose_1cell(const OrdinaryAdjunction& a, Ptr<SymMonClosedVCat> X, const MonVFunctor& H);
MonVNatTrans transpose_2cell(const OrdinaryAdjunction& a, const SymMonClosedVCat& X, const MonVNatTrans& t);
MonVFunctor untranspose_1cell(const OrdinaryAdjunction& a, const SymMonClosedVCat& Y, const MonVFunctor& K);
MonVNatTrans untranspose_2cell(const OrdinaryAdjunction& a, const SymMonClosedVCat& Y, const MonVNatTrans& t);

struct EnrichedAdjunctionResult {
  EnrichedAdjunction adj;  // F́ ⊣ G̀ : G_*uM → uV with unit ὴ and counit έ
  Comparison K;            // K^G : M → (G_*uM)_0
  // Underlying adjunction carried back to M along (K^G)⁻¹.
  OrdinaryAdjunction identified;
  std::vector<std::string> renaming_log;
  LawReport report;
};

// Throws StructuralError when G is not normal, naming the objects where θ^G
// fails to be invertible.
EnrichedAdjunctionResult enrich_adjunction(const OrdinaryAdjunction& a);

// Dom ∘ Enr_V applied to laxslice_adjunction(a).
EnrichedAdjunction enr_v_route(const OrdinaryAdjunction& a);

// F́ on homs from G̀ and the names ὴ alone: φ⁻¹∘(ὴ_y∘−) with
// φ = (−∘ὴ_v)∘G̀_{Fv,w}. Entries are -1 where φ is not invertible.
std::vector<int> reconstruct_left_homs(const EnrichedAdjunction& a);

}  // namespace basechange
