#pragma once

#include <string>
#include <utility>
#include <vector>

#include "basechange/adjoint.hpp"
#include "basechange/autoenrich.hpp"
#include "basechange/instance.hpp"

namespace basechange {

// Resolved contents of an instance file; every entity carries its id as name.
struct Bundle {
  std::vector<Ptr<FinCat>> categories;
  std::vector<Ptr<Smcc>> bases;
  std::vector<Ptr<MonoidalFunctor>> functors;
  std::vector<Ptr<MonoidalNatTrans>> cells;
  std::vector<Ptr<VCat>> vcats;
  std::vector<Ptr<SymMonClosedVCat>> monvcats;
  std::vector<std::pair<std::string, BaseIndex>> indices;  // already closed when requested
  std::vector<OrdinaryAdjunction> adjunctions;

  Ptr<Smcc> base(const std::string& id) const;
  Ptr<MonoidalFunctor> functor(const std::string& id) const;
  Ptr<MonoidalNatTrans> cell(const std::string& id) const;
  Ptr<SymMonClosedVCat> monvcat(const std::string& id) const;
};

// Throws ParseError for malformed records and StructuralError naming any
// unresolved id, carrying the record's line.
Bundle build_bundle(const InstanceFile& f);
Bundle load_bundle(const std::string& path);

// instances/bundle.inst, compiled in.
const std::string& bundled_text();
const Bundle& bundled();

// Probes derived from a bundle.
// G̀ for every symmetric declared functor, plus identities on each uV.
std::vector<Ptr<MonVFunctor>> enriched_one_cells(const Bundle& b);
// (M, G : M → u(base)) pairs: U^M for every monoidal V-category, and G̀.
std::vector<Ptr<MonVFunctor>> normalization_targets(const Bundle& b);
AutoenrichProbe autoenrich_probe(const Bundle& b);
// Objects, 1-cells (with composites and identities) and 2-cells of the lax
// slice adjunction of a.
SliceProbe slice_probe(const OrdinaryAdjunction& a);

}  // namespace basechange
