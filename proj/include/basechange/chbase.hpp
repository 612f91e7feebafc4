#pragma once

#include <vector>

#include "basechange/enriched.hpp"

namespace basechange {

// G_* along a monoidal functor G : V → W. Results are rebuilt on every call
// and compared by table, never by pointer.
VCat push_vcat(const MonoidalFunctor& G, const VCat& a);
VFunctor push_vfunctor(const MonoidalFunctor& G, const VFunctor& F);
VNatTrans push_vnat(const MonoidalFunctor& G, const VNatTrans& t);
// Requires G symmetric.
Ptr<SymMonClosedVCat> push_monvcat(const MonoidalFunctor& G, const SymMonClosedVCat& m);
MonVFunctor push_monvfunctor(const MonoidalFunctor& G, const MonVFunctor& S);
MonVNatTrans push_monvnat(const MonoidalFunctor& G, const MonVNatTrans& t);

// φ_* : G_*a → H_*a, identity on objects with hom maps φ_{hom(A,B)}.
VFunctor push_nat_family(const MonoidalNatTrans& phi, const VCat& a);
// The same map between pushed monoidal V-categories, with identity structure cells.
MonVFunctor push_nat_family_mon(const MonoidalNatTrans& phi, const SymMonClosedVCat& m);
// e and m are identities, the tensor commutes as tables and the coherence
// names are carried onto each other.
LawReport check_strict_symmetric(const MonVFunctor& S);

// U^M = M(I,−) : M → u(base) with e = [1_I] and m = M(ℓ_I⁻¹,1)∘⊗.
MonVFunctor canonical_normalization(Ptr<SymMonClosedVCat> m);
// The hom map of U^M obtained by restricting the hom functor along I; equal to
// the one above, kept separately for cross-checking.
std::vector<int> normalization_via_hom_functor(const SymMonClosedVCat& m);
// U^M_0 : M_0 → V.
Ptr<MonoidalFunctor> normalization_0(Ptr<SymMonClosedVCat> m);

// θ^S_x : M(I,x) → N(J,Sx) as base morphisms.
std::vector<int> theta_components(const MonVFunctor& S);
// θ^S : U^M ⇒ U^N S at the enriched level.
MonVNatTrans theta(Ptr<MonVFunctor> S);
// θ^S at the ordinary level, U^M_0 ⇒ U^N_0 S_0.
MonoidalNatTrans theta_0(Ptr<MonVFunctor> S);
// ξ_X : X → [I,X].
std::vector<int> xi_components(const Smcc& v);
MonVNatTrans unit_normalization_iso(Ptr<Smcc> v);  // 1 ⇒ U^{uV}
// κ^G = ξ⁻¹ θ^G for G into the autoenrichment of its base.
MonVNatTrans kappa(Ptr<MonVFunctor> G);

// All monoidal V-natural S ⇒ T; throws SizeGuardError past 10^6 candidates.
std::vector<MonVNatTrans> enumerate_monoidal_vnats(Ptr<MonVFunctor> S, Ptr<MonVFunctor> T);
bool is_normal(const MonVFunctor& S);
// G must be valid; then exactly one monoidal V-natural U^M ⇒ G exists and it is κ^G.
LawReport check_normalization_unique(Ptr<MonVFunctor> G);
// Ordinary normality: f ↦ G(f)∘e^G is a bijection V(I,x) → W(J,Gx).
// This is θ^G invertible with V and W enriched in sets; it is what makes K^G
// invertible. Enriched normality of G̀ is weaker and holds on every thin base.
bool is_normal_set(const MonoidalFunctor& G);
bool is_normal(Ptr<MonoidalFunctor> G);
// Objects x where V(I,x) → W(J,Gx) is not a bijection.
std::vector<int> normality_failures(const MonoidalFunctor& G);

// K^G : V → (G_*uV)_0, identity on objects, f ↦ G([f])∘e^G.
struct Comparison {
  Ptr<Smcc> target;  // (G_*uV)_0
  MonoidalFunctor K;
};
Comparison comparison_KG(Ptr<MonoidalFunctor> G);
bool is_isomorphism(const MonoidalFunctor& K);
MonoidalFunctor inverse_isomorphism(const MonoidalFunctor& K);

}  // namespace basechange
