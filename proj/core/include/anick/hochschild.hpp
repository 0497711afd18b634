#pragma once

#include <anick/ratmatrix.hpp>
#include <anick/resolution.hpp>

#include <map>
#include <vector>

namespace anick {

// Matrix bimodule over the unital hull: absent generators act by zero, the
// external unit acts as the identity on both sides.
struct FiniteBimodule {
  size_t dim = 0;
  std::map<Letter, RatMatrix> left_action;
  std::map<Letter, RatMatrix> right_action;

  RatMatrix left(Letter g) const;
  RatMatrix right(Letter g) const;
  RatMatrix left_word(const Word& w) const;   // L(x1)L(x2)...L(xm); unit -> identity
  RatMatrix right_word(const Word& w) const;  // R(xm)...R(x1); unit -> identity
};

// Squareness, generator coverage, action commutation, and both-sided relation
// checks. Throws RelationViolated / ActionsDontCommute / InputError.
void validate_bimodule(const FiniteBimodule& M, const Presentation& pres);

// Matrix of the transported differential on Hom-spaces: rows indexed by the
// codomain basis (upper.degree's chains), columns by the domain basis (one
// degree lower; the module itself when upper.degree is 1). Layout is
// chain-major, coordinate-minor. Bases must enumerate the right chain sets.
RatMatrix coboundary_matrix(const ResolutionSlice& upper, const FiniteBimodule& M,
                            const std::vector<AnickChain>& domain,
                            const std::vector<AnickChain>& codomain);

// Same, with the canonical chain orders.
RatMatrix coboundary_matrix(const ResolutionSlice& upper, const FiniteBimodule& M,
                            const Presentation& pres);

// dim H^n for n = 0..maxDegree via exact rank computation on the transported
// complex; builds (or reuses) the resolution through maxDegree + 1.
std::vector<size_t> cohomology_dims(const Presentation& pres, const FiniteBimodule& M,
                                    int maxDegree);

// Representatives of a basis of H^n as coordinate vectors in the degree-n
// Hom-space (chain-major, coordinate-minor).
std::vector<std::vector<Rational>> cohomology_basis(const Presentation& pres,
                                                    const FiniteBimodule& M, int n);

struct PeirceDecomposition {
  FiniteBimodule m11, m10, m01, m00;
  RatMatrix basis11, basis10, basis01, basis00;  // ambient coordinates, one column per basis vector
};

// Splits M along the designated idempotent generator's projectors. Throws
// NotIdempotent when that generator's actions are not idempotent; MathError
// when a component fails closure; components are revalidated.
PeirceDecomposition peirce_decompose(const FiniteBimodule& M, Letter e,
                                     const Presentation& pres);

}  // namespace anick
