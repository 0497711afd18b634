#pragma once

#include <anick/morse.hpp>

#include <string>
#include <vector>

namespace anick {

// Degree-n layer: free bimodule on V^(n-1) with its differential.
struct ResolutionSlice {
  int degree = 0;                                 // n >= 1
  std::vector<AnickChain> basis;                  // V^(n-1), canonically ordered
  std::vector<FreeBimoduleElement> differential;  // parallel to basis

  const FreeBimoduleElement* find(const AnickChain& c) const;
};

// Per-chain residues of delta_lower o delta_upper, fully normalized.
struct ResidueReport {
  int upper_degree = 0;
  std::vector<AnickChain> chains;
  std::vector<FreeBimoduleElement> residues;
  bool all_zero() const;
};

// Immutable snapshot keyed by (presentation hash, max degree).
class Resolution {
 public:
  Resolution(Presentation pres, int maxDegree, std::vector<ResolutionSlice> slices);

  const Presentation& pres() const { return pres_; }
  int max_degree() const { return maxDegree_; }
  const std::vector<ResolutionSlice>& slices() const { return slices_; }
  const ResolutionSlice& slice(int degree) const;  // degree in 1..max_degree
  const std::string& presentation_hash() const { return hash_; }
  bool composition_checked() const { return compositionChecked_; }
  void mark_composition_checked() { compositionChecked_ = true; }

 private:
  Presentation pres_;
  int maxDegree_ = 0;
  std::vector<ResolutionSlice> slices_;
  std::string hash_;
  bool compositionChecked_ = false;
};

// Validates the matching over the needed support, computes delta_1..delta_N,
// and verifies the complex property at every level (augmentation included).
// Throws CompositionNonzero on any nonzero residue.
Resolution build_resolution(const Presentation& pres, int maxDegree);

// Shared immutable snapshots; extends and reuses across calls.
const Resolution& build_resolution_cached(const Presentation& pres, int maxDegree);

// delta_lower o delta_upper per chain of the upper slice; report only.
ResidueReport check_composition(const ResolutionSlice& upper, const ResolutionSlice& lower,
                                const Presentation& pres);

// Multiplication map applied to delta_1: each l [] r term collapses to l*r.
std::vector<FreePoly> augmentation_residues(const ResolutionSlice& first,
                                            const Presentation& pres);

}  // namespace anick
