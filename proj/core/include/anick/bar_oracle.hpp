#pragma once

#include <anick/hochschild.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace anick {

// Multiplication table of a finite-dimensional nonunital algebra, basis given
// by the normal words of a presentation.
struct FiniteAlgebra {
  std::vector<Word> basis;  // deg-lex order
  // mult[i][j] = sparse expansion of basis[i] * basis[j]
  std::vector<std::vector<std::vector<std::pair<size_t, Rational>>>> mult;

  size_t dim() const { return basis.size(); }
};

// Breadth-first normal-word enumeration; succeeds iff some length level is
// empty. Structure constants from normal_form; associativity checked on all
// basis triples. Throws InfiniteDimensional when the count passes basisCap.
FiniteAlgebra finite_basis(const Presentation& pres, size_t basisCap = 4096);

// Hochschild dims for n = 0..maxDegree from the normalized two-sided bar
// cochain complex, assembled naively over the full tensor bases. Throws
// ResourceLimit when any matrix would exceed rowCap rows.
std::vector<size_t> bar_cohomology(const FiniteAlgebra& A, const FiniteBimodule& M,
                                   int maxDegree, size_t rowCap = 1000000);

// The degree-n coboundary matrix of that complex (exposed for the square-zero
// property test). Layout: tuple-major, coordinate-minor; first tensor factor
// most significant.
RatMatrix bar_coboundary_matrix(const FiniteAlgebra& A, const FiniteBimodule& M, int n,
                                size_t rowCap = 1000000);

}  // namespace anick
