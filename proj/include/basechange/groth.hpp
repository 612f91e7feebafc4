#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "basechange/chbase.hpp"

namespace basechange {

// Cells of ∫ eSMCCAT(−). A 1-cell carries f↓ and f↑ : f↓_*(A↑) → B↑; a
// 2-cell carries α↓ : f↓ ⇒ g↓ and α↑ : f↑ ⇒ g↑ ∘ α↓_*A↑.
struct GrothObj {
  Ptr<Smcc> base;
  Ptr<SymMonClosedVCat> fibre;
  std::string name() const { return "(" + base->name + "," + fibre->name + ")"; }
};

struct Groth1Cell {
  GrothObj src, dst;
  Ptr<MonoidalFunctor> down;
  Ptr<MonVFunctor> up;
};

struct Groth2Cell {
  Groth1Cell src, dst;
  Ptr<MonoidalNatTrans> down;
  Ptr<MonVNatTrans> up;
};

bool operator==(const GrothObj& a, const GrothObj& b);
bool operator==(const Groth1Cell& a, const Groth1Cell& b);
bool operator==(const Groth2Cell& a, const Groth2Cell& b);

GrothObj groth_obj(Ptr<SymMonClosedVCat> fibre);
LawReport check_groth_1cell(const Groth1Cell& f);
LawReport check_groth_2cell(const Groth2Cell& a);

// k_*(A↑), memoized on the identity of (k, A↑).
Ptr<SymMonClosedVCat> pushed_fibre(Ptr<MonoidalFunctor> k, Ptr<SymMonClosedVCat> A);

Groth1Cell groth_identity(const GrothObj& A);
Groth1Cell groth_compose(const Groth1Cell& g, const Groth1Cell& f);  // g∘f
Groth2Cell groth_identity2(const Groth1Cell& f);
Groth2Cell groth_vcomp(const Groth2Cell& b, const Groth2Cell& a);  // b·a
Groth2Cell groth_whisker_right(const Groth2Cell& a, const Groth1Cell& f);  // αf
Groth2Cell groth_whisker_left(const Groth1Cell& u, const Groth2Cell& a);   // uα

// ψ(k,A) = (k, 1) and φ(κ,g) = (κ, 1) : (k, g↑∘κ_*A↑) ⇒ g.
Groth1Cell designated_cocartesian(Ptr<MonoidalFunctor> k, const GrothObj& A);
Groth2Cell designated_cartesian(Ptr<MonoidalNatTrans> kappa, const Groth1Cell& g);

// Images of G and α under the autoenrichment 2-functor.
GrothObj grave_obj(Ptr<Smcc> v);
Groth1Cell grave_cell(Ptr<MonoidalFunctor> G);
Groth2Cell grave_cell2(Ptr<MonoidalNatTrans> a);

// Every symmetric monoidal V-functor M → N; throws SizeGuardError past 10^6
// candidates.
std::vector<MonVFunctor> enumerate_monvfunctors(Ptr<SymMonClosedVCat> M, Ptr<SymMonClosedVCat> N);

// Finite slice of the base 2-category together with fibre objects over it.
struct BaseIndex {
  std::vector<Ptr<Smcc>> bases;
  std::vector<Ptr<MonoidalFunctor>> functors;
  std::vector<Ptr<MonoidalNatTrans>> cells;
  std::vector<GrothObj> objects;
};
LawReport check_base_index(const BaseIndex& idx);
// Adds identities, composites, vertical composites and whiskerings until
// nothing new appears (new by table). Cells are re-pointed at the listed
// functors. Throws SizeGuardError past max_cells() entries.
BaseIndex close_base_index(const BaseIndex& idx);

// Overridable so that corrupted cleavages can be fed to the checker.
struct Cleavage {
  std::function<Groth1Cell(Ptr<MonoidalFunctor>, const GrothObj&)> psi = designated_cocartesian;
  std::function<Groth2Cell(Ptr<MonoidalNatTrans>, const Groth1Cell&)> phi = designated_cartesian;
};

// Problems are drawn from the probe universe: every 1-cell whose f↓ lies in
// the index, and every 2-cell whose α↓ does. Solutions range over all fibre
// cells above the given base cells. Enumerations are memoized.
struct Universe {
  const BaseIndex* idx = nullptr;
  explicit Universe(const BaseIndex* i = nullptr);
  std::vector<Groth1Cell> one_cells(const GrothObj& A, const GrothObj& B) const;
  std::vector<Groth1Cell> one_cells_over(const GrothObj& A, const GrothObj& B,
                                         Ptr<MonoidalFunctor> k) const;
  std::vector<Groth2Cell> two_cells(const Groth1Cell& f, const Groth1Cell& g) const;
  std::vector<Groth2Cell> two_cells_over(const Groth1Cell& f, const Groth1Cell& g,
                                         Ptr<MonoidalNatTrans> kappa) const;

 private:
  struct Memo;
  std::shared_ptr<Memo> memo_;
};

// Throws StructuralError naming the failed compatibility equation.
std::vector<Groth2Cell> solve_extension_problem(const Universe& u, const Groth1Cell& f,
                                                const Groth2Cell& alpha,
                                                Ptr<MonoidalNatTrans> beta);
std::vector<Groth2Cell> solve_lifting_problem(const Universe& u, const Groth2Cell& phi,
                                              const Groth2Cell& gamma,
                                              Ptr<MonoidalNatTrans> kappa);

LawReport check_split_op2fibration(const BaseIndex& idx, const Cleavage& cl = {});

// Lax slice ∫⫽A: objects (B, f : B → A), 1-cells (s, β : f ⇒ g∘s), 2-cells α
// with (gα)·β = γ.
struct GrothSliceObj {
  GrothObj obj;
  Groth1Cell map;
};
struct GrothSlice1 {
  GrothSliceObj src, dst;
  Groth1Cell s;
  Groth2Cell sigma;
};
struct GrothSlice2 {
  GrothSlice1 src, dst;
  Groth2Cell alpha;
};

// The same shapes inside the fibre eSMCCAT_V over A↑.
struct FibreSliceObj {
  Ptr<SymMonClosedVCat> obj;
  Ptr<MonVFunctor> map;
};
struct FibreSlice1 {
  FibreSliceObj src, dst;
  Ptr<MonVFunctor> s;
  Ptr<MonVNatTrans> sigma;
};
struct FibreSlice2 {
  FibreSlice1 src, dst;
  Ptr<MonVNatTrans> alpha;
};
bool operator==(const FibreSliceObj& a, const FibreSliceObj& b);
bool operator==(const FibreSlice1& a, const FibreSlice1& b);
bool operator==(const FibreSlice2& a, const FibreSlice2& b);

GrothSlice1 groth_slice_compose(const GrothSlice1& t, const GrothSlice1& s);
GrothSlice1 groth_slice_identity(const GrothSliceObj& b);
FibreSlice1 fibre_slice_compose(const FibreSlice1& t, const FibreSlice1& s);
FibreSlice1 fibre_slice_identity(const FibreSliceObj& b);
LawReport check_groth_slice_2cell(const GrothSlice2& a);

// Explicit formulas: (B,f) ↦ (f↓_*B↑, f↑), (s,β) ↦ (g↓_*(s↑)∘β↓_*B↑, β↑),
// α ↦ g↓_*(α↑)∘β↓_*B↑.
FibreSliceObj laxslice_to_fibre(const GrothSliceObj& b);
FibreSlice1 laxslice_to_fibre(const GrothSlice1& s);
FibreSlice2 laxslice_to_fibre(const GrothSlice2& a);

// The general construction by extension and lifting problems against a
// cleavage; each step must have exactly one solution or it throws.
FibreSliceObj laxslice_to_fibre_solved(const Universe& u, const GrothSliceObj& b,
                                       const Cleavage& cl = {});
FibreSlice1 laxslice_to_fibre_solved(const Universe& u, const GrothSlice1& s,
                                     const Cleavage& cl = {});
FibreSlice2 laxslice_to_fibre_solved(const Universe& u, const GrothSlice2& a,
                                     const Cleavage& cl = {});

// Lax slice SMCCAT⫽V of ordinary cells.
struct SliceObj {
  Ptr<Smcc> obj;
  Ptr<MonoidalFunctor> map;
};
struct Slice1 {
  SliceObj src, dst;
  Ptr<MonoidalFunctor> s;
  Ptr<MonoidalNatTrans> sigma;  // g ⇒ h∘s
};
struct Slice2 {
  Slice1 src, dst;
  Ptr<MonoidalNatTrans> alpha;
};
Slice1 slice_compose(const Slice1& t, const Slice1& s);
Slice1 slice_identity(const SliceObj& b);
LawReport check_slice_1cell(const Slice1& s);
LawReport check_slice_2cell(const Slice2& a);

// Enr_V and the composite route through the lax slice of ∫.
FibreSliceObj enr_v(const SliceObj& b);
FibreSlice1 enr_v(const Slice1& s);
FibreSlice2 enr_v(const Slice2& a);
GrothSliceObj lift_to_groth(const SliceObj& b);
GrothSlice1 lift_to_groth(const Slice1& s);
GrothSlice2 lift_to_groth(const Slice2& a);

struct SliceProbe {
  std::vector<SliceObj> objects;
  std::vector<Slice1> one_cells;
  std::vector<Slice2> two_cells;
};
// Agreement of enr_v with both versions of the composite route, and the
// 2-functor laws of enr_v on composable probe pairs.
LawReport check_enr_v(const SliceProbe& probe);
// 2-functor laws of laxslice_to_fibre on the lift of the probe, and agreement
// of the explicit formulas with the solver construction.
LawReport check_laxslice_to_fibre(const SliceProbe& probe);

}  // namespace basechange
