#include <anick/hochschild.hpp>

#include <anick/errors.hpp>

#include "parallel.hpp"

#include <algorithm>
#include <map>

namespace anick {

RatMatrix FiniteBimodule::left(Letter g) const {
  auto it = left_action.find(g);
  return it == left_action.end() ? RatMatrix(dim, dim) : it->second;
}

RatMatrix FiniteBimodule::right(Letter g) const {
  auto it = right_action.find(g);
  return it == right_action.end() ? RatMatrix(dim, dim) : it->second;
}

RatMatrix FiniteBimodule::left_word(const Word& w) const {
  RatMatrix m = RatMatrix::identity(dim);
  for (Letter g : w.letters) m = m * left(g);
  return m;
}

RatMatrix FiniteBimodule::right_word(const Word& w) const {
  RatMatrix m = RatMatrix::identity(dim);
  for (Letter g : w.letters) m = right(g) * m;
  return m;
}

void validate_bimodule(const FiniteBimodule& M, const Presentation& pres) {
  if (M.dim == 0) throw InputError("bimodule dimension must be positive");
  auto checkShape = [&](const std::map<Letter, RatMatrix>& action, const char* side) {
    for (const auto& [g, m] : action) {
      if (g < 0 || g >= static_cast<Letter>(pres.arity()))
        throw InputError(std::string("bimodule names an unknown generator on the ") + side);
      if (m.rows() != M.dim || m.cols() != M.dim)
        throw InputError(std::string("bimodule matrix shape mismatch on the ") + side);
    }
  };
  checkShape(M.left_action, "left");
  checkShape(M.right_action, "right");

  const int arity = static_cast<int>(pres.arity());
  for (Letter a = 0; a < arity; ++a)
    for (Letter b = 0; b < arity; ++b) {
      RatMatrix la = M.left(a), rb = M.right(b);
      if (!(la * rb == rb * la))
        throw ActionsDontCommute("left action of " + pres.name(a) +
                                 " does not commute with right action of " + pres.name(b));
    }

  for (const RewriteRule& rule : pres.rules()) {
    RatMatrix lhsL = M.left_word(rule.lhs);
    RatMatrix rhsL(M.dim, M.dim);
    for (const auto& [w, c] : rule.rhs.terms()) {
      RatMatrix t = M.left_word(w);
      for (size_t i = 0; i < M.dim; ++i)
        for (size_t j = 0; j < M.dim; ++j) rhsL.at(i, j) += c * t.at(i, j);
    }
    if (!(lhsL == rhsL))
      throw RelationViolated("relation on " + pres.format_word(rule.lhs) +
                             " fails under the left action");
    RatMatrix lhsR = M.right_word(rule.lhs);
    RatMatrix rhsR(M.dim, M.dim);
    for (const auto& [w, c] : rule.rhs.terms()) {
      RatMatrix t = M.right_word(w);
      for (size_t i = 0; i < M.dim; ++i)
        for (size_t j = 0; j < M.dim; ++j) rhsR.at(i, j) += c * t.at(i, j);
    }
    if (!(lhsR == rhsR))
      throw RelationViolated("relation on " + pres.format_word(rule.lhs) +
                             " fails under the right action");
  }
}

RatMatrix coboundary_matrix(const ResolutionSlice& upper, const FiniteBimodule& M,
                            const std::vector<AnickChain>& domain,
                            const std::vector<AnickChain>& codomain) {
  const size_t d = M.dim;
  const bool bottom = upper.degree == 1;
  const size_t cols = bottom ? d : domain.size() * d;
  RatMatrix out(codomain.size() * d, cols);

  std::map<AnickChain, size_t, AnickChainLess> colIndex;
  for (size_t i = 0; i < domain.size(); ++i) colIndex.emplace(domain[i], i);

  detail::parallel_for(codomain.size(), [&](size_t ci) {
    const FreeBimoduleElement* diff = upper.find(codomain[ci]);
    if (!diff) throw InputError("codomain chain missing from the slice basis");
    for (const auto& [key, c] : diff->terms()) {
      size_t colBlock = 0;
      if (!bottom) {
        auto it = colIndex.find(key.vertex.as_chain());
        if (it == colIndex.end())
          throw InputError("differential target chain missing from the domain basis");
        colBlock = it->second;
      }
      RatMatrix block = M.left_word(key.left) * M.right_word(key.right);
      for (size_t bi = 0; bi < d; ++bi)
        for (size_t bj = 0; bj < d; ++bj) {
          if (block.at(bi, bj) == 0) continue;
          out.at(ci * d + bi, colBlock * d + bj) += c * block.at(bi, bj);
        }
    }
  });
  return out;
}

RatMatrix coboundary_matrix(const ResolutionSlice& upper, const FiniteBimodule& M,
                            const Presentation& pres) {
  std::vector<AnickChain> domain;
  if (upper.degree >= 2) domain = enumerate_chains_cached(pres, upper.degree - 2);
  return coboundary_matrix(upper, M, domain, upper.basis);
}

std::vector<size_t> cohomology_dims(const Presentation& pres, const FiniteBimodule& M,
                                    int maxDegree) {
  if (maxDegree < 0) throw InputError("cohomology_dims requires max degree >= 0");
  validate_bimodule(M, pres);
  const Resolution& res = build_resolution_cached(pres, maxDegree + 1);
  const size_t d = M.dim;

  std::vector<size_t> ranks(static_cast<size_t>(maxDegree) + 1);
  std::vector<size_t> cochainDims(static_cast<size_t>(maxDegree) + 1);
  for (int n = 0; n <= maxDegree; ++n) {
    RatMatrix delta = coboundary_matrix(res.slice(n + 1), M, pres);
    ranks[static_cast<size_t>(n)] = rank_bareiss(delta);
    cochainDims[static_cast<size_t>(n)] =
        n == 0 ? d : enumerate_chains_cached(pres, n - 1).size() * d;
  }
  std::vector<size_t> dims(static_cast<size_t>(maxDegree) + 1);
  for (int n = 0; n <= maxDegree; ++n) {
    size_t kernel = cochainDims[static_cast<size_t>(n)] - ranks[static_cast<size_t>(n)];
    size_t imageBelow = n == 0 ? 0 : ranks[static_cast<size_t>(n - 1)];
    dims[static_cast<size_t>(n)] = kernel - imageBelow;
  }
  return dims;
}

std::vector<std::vector<Rational>> cohomology_basis(const Presentation& pres,
                                                    const FiniteBimodule& M, int n) {
  if (n < 0) throw InputError("cohomology_basis requires degree >= 0");
  validate_bimodule(M, pres);
  const Resolution& res = build_resolution_cached(pres, n + 1);
  RatMatrix delta = coboundary_matrix(res.slice(n + 1), M, pres);
  std::vector<std::vector<Rational>> kernel = kernel_basis(delta);
  if (n == 0) return kernel;

  RatMatrix below = coboundary_matrix(res.slice(n), M, pres);
  RatMatrix stacked(delta.cols(), below.cols() + kernel.size());
  for (size_t i = 0; i < delta.cols(); ++i)
    for (size_t j = 0; j < below.cols(); ++j) stacked.at(i, j) = below.at(i, j);
  for (size_t k = 0; k < kernel.size(); ++k)
    for (size_t i = 0; i < delta.cols(); ++i) stacked.at(i, below.cols() + k) = kernel[k][i];

  std::vector<std::vector<Rational>> reps;
  for (size_t p : independent_columns(stacked))
    if (p >= below.cols()) reps.push_back(kernel[p - below.cols()]);
  return reps;
}

namespace {

FiniteBimodule restrict_component(const FiniteBimodule& M, const RatMatrix& basis,
                                  const Presentation& pres, const char* label) {
  FiniteBimodule comp;
  comp.dim = basis.cols();
  const int arity = static_cast<int>(pres.arity());
  for (Letter g = 0; g < arity; ++g) {
    for (int side = 0; side < 2; ++side) {
      RatMatrix act = side == 0 ? M.left(g) : M.right(g);
      RatMatrix restricted(comp.dim, comp.dim);
      for (size_t j = 0; j < basis.cols(); ++j) {
        std::vector<Rational> col(M.dim);
        for (size_t i = 0; i < M.dim; ++i) col[i] = basis.at(i, j);
        std::vector<Rational> image = act.apply(col);
        auto coords = solve_columns(basis, image);
        if (!coords)
          throw MathError(std::string("Peirce component ") + label +
                          " is not closed under the action of " + pres.name(g));
        for (size_t i = 0; i < comp.dim; ++i) restricted.at(i, j) = (*coords)[i];
      }
      if (!restricted.is_zero()) {
        if (side == 0)
          comp.left_action.emplace(g, std::move(restricted));
        else
          comp.right_action.emplace(g, std::move(restricted));
      }
    }
  }
  if (comp.dim > 0) validate_bimodule(comp, pres);
  return comp;
}

RatMatrix column_basis(const RatMatrix& projector) {
  std::vector<size_t> cols = independent_columns(projector);
  RatMatrix basis(projector.rows(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < projector.rows(); ++i) basis.at(i, j) = projector.at(i, cols[j]);
  return basis;
}

}  // namespace

PeirceDecomposition peirce_decompose(const FiniteBimodule& M, Letter e,
                                     const Presentation& pres) {
  validate_bimodule(M, pres);
  RatMatrix le = M.left(e), re = M.right(e);
  if (!(le * le == le))
    throw NotIdempotent("left action of " + pres.name(e) + " is not idempotent");
  if (!(re * re == re))
    throw NotIdempotent("right action of " + pres.name(e) + " is not idempotent");
  RatMatrix id = RatMatrix::identity(M.dim);
  RatMatrix lc = id - le, rc = id - re;

  PeirceDecomposition out;
  out.basis11 = column_basis(le * re);
  out.basis10 = column_basis(le * rc);
  out.basis01 = column_basis(lc * re);
  out.basis00 = column_basis(lc * rc);
  if (out.basis11.cols() + out.basis10.cols() + out.basis01.cols() + out.basis00.cols() !=
      M.dim)
    throw MathError("Peirce component dimensions do not sum to the module dimension");
  out.m11 = restrict_component(M, out.basis11, pres, "(1,1)");
  out.m10 = restrict_component(M, out.basis10, pres, "(1,0)");
  out.m01 = restrict_component(M, out.basis01, pres, "(0,1)");
  out.m00 = restrict_component(M, out.basis00, pres, "(0,0)");
  return out;
}

}  // namespace anick
