#include <anick/errors.hpp>
#include <anick/hochschild.hpp>
#include <anick/resolution.hpp>
#include <anick/weyl.hpp>

#include "helpers.hpp"

#include <doctest.h>

#include <vector>

using namespace anick;

namespace {

FiniteBimodule single_action(size_t dim, Letter g, const RatMatrix& L, const RatMatrix& R) {
  FiniteBimodule M;
  M.dim = dim;
  M.left_action.emplace(g, L);
  M.right_action.emplace(g, R);
  return M;
}

}  // namespace

TEST_SUITE("hochschild") {

TEST_CASE("bimodule validation accepts the fixture corpus") {
  struct Row {
    const char* pres;
    const char* mod;
  };
  const Row rows[] = {
      {"dual.json", "dual_triv.json"},       {"dual.json", "dual_reg.json"},
      {"x3.json", "x3_triv.json"},           {"x3.json", "x3_reg.json"},
      {"triangular.json", "tri_triv.json"},  {"triangular.json", "tri_reg.json"},
      {"w1.json", "w1_triv1.json"},          {"w1.json", "w1_triv2.json"},
      {"w1.json", "w1_triv3.json"},
  };
  for (const Row& r : rows) {
    Presentation pres = testutil::load_pres(r.pres);
    FiniteBimodule M = testutil::load_mod(r.mod, pres);
    CHECK_NOTHROW(validate_bimodule(M, pres));
  }
}

TEST_CASE("validation rejects a relation violation") {
  // pe -> p forces L(p)L(e) = L(p); identity for p and zero for e breaks it
  Presentation pres = weyl::w1_presentation();
  FiniteBimodule M = single_action(1, pres.letter("p"), RatMatrix::identity(1),
                                   RatMatrix::identity(1));
  CHECK_THROWS_AS(validate_bimodule(M, pres), RelationViolated);
}

TEST_CASE("validation rejects non-commuting sides") {
  Presentation pres = testutil::load_pres("dual.json");
  RatMatrix L(2, 2), R(2, 2);
  L.at(0, 1) = 1;  // L R - R L = diag(1, -1) while both squares vanish
  R.at(1, 0) = 1;
  FiniteBimodule M = single_action(2, pres.letter("x"), L, R);
  CHECK_THROWS_AS(validate_bimodule(M, pres), ActionsDontCommute);
}

TEST_CASE("validation rejects shape mismatches") {
  Presentation pres = testutil::load_pres("dual.json");
  FiniteBimodule M = single_action(2, pres.letter("x"), RatMatrix(2, 2), RatMatrix(3, 3));
  CHECK_THROWS_AS(validate_bimodule(M, pres), InputError);
}

TEST_CASE("word actions compose in opposite orders") {
  Presentation pres = testutil::load_pres("x3.json");
  FiniteBimodule M = testutil::load_mod("x3_reg.json", pres);
  Word xx = pres.parse_word("xx");
  CHECK(M.left_word(xx) == M.left(pres.letter("x")) * M.left(pres.letter("x")));
  CHECK(M.left_word(Word::unit()) == RatMatrix::identity(3));
  CHECK(M.right_word(Word::unit()) == RatMatrix::identity(3));
  CHECK(M.left_word(xx) * M.left(pres.letter("x")) == RatMatrix(3, 3));  // x^3 acts by zero
}

TEST_CASE("coboundary matrices square to zero") {
  Presentation pres = weyl::w1_presentation();
  FiniteBimodule M = testutil::load_mod("w1_triv2.json", pres);
  const Resolution& res = build_resolution_cached(pres, 4);
  RatMatrix d0 = coboundary_matrix(res.slice(1), M, pres);
  RatMatrix d1 = coboundary_matrix(res.slice(2), M, pres);
  RatMatrix d2 = coboundary_matrix(res.slice(3), M, pres);
  RatMatrix d3 = coboundary_matrix(res.slice(4), M, pres);
  CHECK(d0.rows() == 3 * 2);
  CHECK(d0.cols() == 2);
  CHECK(d1.rows() == 6 * 2);
  CHECK(d1.cols() == 3 * 2);
  CHECK((d1 * d0).is_zero());
  CHECK((d2 * d1).is_zero());
  CHECK((d3 * d2).is_zero());
}

TEST_CASE("explicit bases agree with the canonical overload") {
  Presentation pres = testutil::load_pres("dual.json");
  FiniteBimodule M = testutil::load_mod("dual_reg.json", pres);
  const Resolution& res = build_resolution_cached(pres, 3);
  RatMatrix canonical = coboundary_matrix(res.slice(2), M, pres);
  RatMatrix explicitBases = coboundary_matrix(res.slice(2), M, enumerate_chains(pres, 0),
                                              enumerate_chains(pres, 1));
  CHECK(canonical == explicitBases);
}

TEST_CASE("cohomology dimensions of the reference bimodules") {
  Presentation dual = testutil::load_pres("dual.json");
  CHECK(cohomology_dims(dual, testutil::load_mod("dual_reg.json", dual), 4) ==
        std::vector<size_t>{2, 1, 1, 1, 1});
  CHECK(cohomology_dims(dual, testutil::load_mod("dual_triv.json", dual), 4) ==
        std::vector<size_t>{1, 1, 1, 1, 1});

  Presentation x3 = testutil::load_pres("x3.json");
  CHECK(cohomology_dims(x3, testutil::load_mod("x3_reg.json", x3), 4) ==
        std::vector<size_t>{3, 2, 2, 2, 2});

  Presentation w1 = weyl::w1_presentation();
  CHECK(cohomology_dims(w1, testutil::load_mod("w1_triv2.json", w1), 3) ==
        std::vector<size_t>{2, 0, 0, 0});
}

TEST_CASE("dimensions are invariant under a bimodule basis permutation") {
  Presentation pres = testutil::load_pres("triangular.json");
  FiniteBimodule M = testutil::load_mod("tri_reg.json", pres);

  // conjugate every action by the reversal permutation
  RatMatrix P(M.dim, M.dim);
  for (size_t i = 0; i < M.dim; ++i) P.at(i, M.dim - 1 - i) = 1;
  FiniteBimodule N;
  N.dim = M.dim;
  for (const auto& [g, L] : M.left_action) N.left_action.emplace(g, P * L * P);
  for (const auto& [g, R] : M.right_action) N.right_action.emplace(g, P * R * P);
  validate_bimodule(N, pres);

  CHECK(cohomology_dims(pres, M, 2) == cohomology_dims(pres, N, 2));
}

TEST_CASE("fixture regular bimodules match the programmatic construction") {
  for (const char* name : {"dual.json", "x3.json", "triangular.json"}) {
    Presentation pres = testutil::load_pres(name);
    FiniteBimodule built = testutil::regular_bimodule(pres);
    validate_bimodule(built, pres);
    std::string reg = std::string(name).substr(0, std::string(name).find('.')) + "_reg.json";
    if (reg == "triangular_reg.json") reg = "tri_reg.json";
    FiniteBimodule fixture = testutil::load_mod(reg, pres);
    CHECK(built.dim == fixture.dim);
    CHECK(cohomology_dims(pres, built, 2) == cohomology_dims(pres, fixture, 2));
  }
}

TEST_CASE("cocycle representatives are closed and independent") {
  Presentation pres = testutil::load_pres("dual.json");
  FiniteBimodule M = testutil::load_mod("dual_reg.json", pres);
  const Resolution& res = build_resolution_cached(pres, 3);
  for (int n = 0; n <= 2; ++n) {
    std::vector<std::vector<Rational>> basis = cohomology_basis(pres, M, n);
    CHECK(basis.size() == cohomology_dims(pres, M, n)[static_cast<size_t>(n)]);
    RatMatrix up = coboundary_matrix(res.slice(n + 1), M, pres);
    for (const auto& v : basis)
      for (const Rational& c : up.apply(v)) CHECK(c == Rational(0));
  }
}

TEST_CASE("idempotent splitting of a diagonal bimodule") {
  Presentation pres = testutil::load_pres("triangular.json");
  // a fixes the first coordinate, b the second, c acts by zero
  FiniteBimodule M;
  M.dim = 2;
  RatMatrix A(2, 2), B(2, 2);
  A.at(0, 0) = 1;
  B.at(1, 1) = 1;
  M.left_action.emplace(pres.letter("a"), A);
  M.right_action.emplace(pres.letter("a"), A);
  M.left_action.emplace(pres.letter("b"), B);
  M.right_action.emplace(pres.letter("b"), B);
  validate_bimodule(M, pres);

  PeirceDecomposition parts = peirce_decompose(M, pres.letter("a"), pres);
  CHECK(parts.m11.dim == 1);
  CHECK(parts.m10.dim == 0);
  CHECK(parts.m01.dim == 0);
  CHECK(parts.m00.dim == 1);
  CHECK(parts.m11.dim + parts.m10.dim + parts.m01.dim + parts.m00.dim == M.dim);
  CHECK(parts.basis11.cols() == 1);
  CHECK(parts.basis11.rows() == M.dim);
}

TEST_CASE("idempotent splitting requires closed components") {
  // a M a is not a sub-bimodule of the regular bimodule: a * c = c escapes it,
  // because a is a one-sided unit for c only
  Presentation pres = testutil::load_pres("triangular.json");
  FiniteBimodule M = testutil::load_mod("tri_reg.json", pres);
  CHECK_THROWS_AS(peirce_decompose(M, pres.letter("a"), pres), MathError);
}

TEST_CASE("idempotent splitting rejects a non-idempotent generator") {
  Presentation pres = testutil::load_pres("dual.json");
  FiniteBimodule M = testutil::load_mod("dual_reg.json", pres);
  CHECK_THROWS_AS(peirce_decompose(M, pres.letter("x"), pres), NotIdempotent);
}

TEST_CASE("zero actions put everything in the corner component") {
  Presentation pres = weyl::w1_presentation();
  FiniteBimodule M = testutil::load_mod("w1_triv2.json", pres);
  PeirceDecomposition parts = peirce_decompose(M, pres.letter("e"), pres);
  CHECK(parts.m11.dim == 0);
  CHECK(parts.m10.dim == 0);
  CHECK(parts.m01.dim == 0);
  CHECK(parts.m00.dim == 2);
}

}  // TEST_SUITE
