#pragma once

#include <anick/bar_oracle.hpp>
#include <anick/chains.hpp>
#include <anick/hochschild.hpp>
#include <anick/json_io.hpp>
#include <anick/morse.hpp>

#include <map>
#include <string>
#include <vector>

namespace testutil {

inline std::string fixture(const std::string& name) {
  return std::string(ANICK_FIXTURES_DIR) + "/" + name;
}

inline anick::Presentation load_pres(const std::string& name) {
  return anick::json_io::load_presentation(fixture(name));
}

inline anick::FiniteBimodule load_mod(const std::string& name, const anick::Presentation& pres) {
  return anick::json_io::load_bimodule(fixture(name), pres);
}

// coef * left [vertex] right; the vertex text "[]" is the Lambda (x) Lambda slot
inline anick::FreeBimoduleElement term(const anick::Presentation& pres, const anick::Rational& c,
                                       const std::string& left, const std::string& vertex,
                                       const std::string& right) {
  anick::BimoduleKey k;
  if (!left.empty()) k.left = pres.parse_word(left);
  k.vertex = anick::BarVertex(anick::parse_chain(vertex, pres));
  if (!right.empty()) k.right = pres.parse_word(right);
  anick::FreeBimoduleElement e;
  e.add(k, c);
  return e;
}

// the unital hull as a bimodule over itself: basis {1} + normal words (deg-lex)
inline anick::FiniteBimodule regular_bimodule(const anick::Presentation& pres) {
  using namespace anick;
  FiniteAlgebra A = finite_basis(pres);
  const size_t d = A.dim() + 1;
  std::map<Word, size_t, DegLexLess> index;
  for (size_t i = 0; i < A.basis.size(); ++i) index.emplace(A.basis[i], i + 1);
  auto put = [&](RatMatrix& m, size_t col, const FreePoly& f) {
    for (const auto& [w, c] : f.terms()) m.at(index.at(w), col) = c;
  };
  FiniteBimodule M;
  M.dim = d;
  for (size_t g = 0; g < pres.arity(); ++g) {
    Word gw = Word::single(static_cast<Letter>(g));
    RatMatrix L(d, d), R(d, d);
    put(L, 0, FreePoly::monomial(gw));
    put(R, 0, FreePoly::monomial(gw));
    for (size_t j = 0; j < A.basis.size(); ++j) {
      put(L, j + 1, pres.normal_form(gw + A.basis[j]));
      put(R, j + 1, pres.normal_form(A.basis[j] + gw));
    }
    M.left_action.emplace(static_cast<Letter>(g), L);
    M.right_action.emplace(static_cast<Letter>(g), R);
  }
  return M;
}

// scalar generators acting by zero on both sides
inline anick::FiniteBimodule trivial_bimodule(size_t dim) {
  anick::FiniteBimodule M;
  M.dim = dim;
  return M;
}

}  // namespace testutil
