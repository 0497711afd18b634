#include <anick/ratmatrix.hpp>

#include <doctest.h>

#include <vector>

using namespace anick;

namespace {

RatMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_SUITE("ratmatrix") {

TEST_CASE("rank agrees between fraction-free and rational elimination") {
  RatMatrix a = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  size_t r = 0;
  rref(a, &r);
  CHECK(r == 2);
  CHECK(rank_bareiss(a) == 2);

  RatMatrix frac(2, 2);
  frac.at(0, 0) = Rational(1, 2);
  frac.at(0, 1) = Rational(1, 3);
  frac.at(1, 0) = Rational(1, 4);
  frac.at(1, 1) = Rational(1, 6);
  CHECK(rank_bareiss(frac) == 1);
  size_t fr = 0;
  rref(frac, &fr);
  CHECK(fr == 1);

  CHECK(rank_bareiss(RatMatrix::identity(5)) == 5);
  CHECK(rank_bareiss(RatMatrix(3, 4)) == 0);
}

TEST_CASE("rref yields pivots and an echelon matrix") {
  RatMatrix a = from_rows({{0, 2, 4}, {1, 1, 1}});
  size_t r = 0;
  std::vector<size_t> pivots;
  RatMatrix e = rref(a, &r, &pivots);
  CHECK(r == 2);
  CHECK(pivots == std::vector<size_t>{0, 1});
  CHECK(e.at(0, 0) == Rational(1));
  CHECK(e.at(0, 1) == Rational(0));
  CHECK(e.at(1, 1) == Rational(1));
  CHECK(e.at(0, 2) == Rational(-1));
  CHECK(e.at(1, 2) == Rational(2));
}

TEST_CASE("kernel vectors annihilate the matrix") {
  RatMatrix a = from_rows({{1, 2, 0}, {0, 0, 1}});
  auto kernel = kernel_basis(a);
  REQUIRE(kernel.size() == 1);
  CHECK(kernel[0] == std::vector<Rational>{Rational(-2), Rational(1), Rational(0)});
  for (const auto& v : kernel)
    for (const Rational& c : a.apply(v)) CHECK(c == Rational(0));

  CHECK(kernel_basis(RatMatrix::identity(3)).empty());
  CHECK(kernel_basis(RatMatrix(2, 3)).size() == 3);
}

TEST_CASE("independent columns span the column space") {
  RatMatrix a = from_rows({{1, 2, 1}, {2, 4, 0}});
  auto cols = independent_columns(a);
  CHECK(cols == std::vector<size_t>{0, 2});
}

TEST_CASE("solve_columns distinguishes consistent from inconsistent systems") {
  RatMatrix a = from_rows({{1, 0}, {0, 1}, {1, 1}});
  auto sol = solve_columns(a, {Rational(1), Rational(2), Rational(3)});
  REQUIRE(sol.has_value());
  CHECK(*sol == std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(!solve_columns(a, {Rational(1), Rational(0), Rational(0)}).has_value());
}

TEST_CASE("algebraic operations") {
  RatMatrix a = from_rows({{1, 2}, {3, 4}});
  RatMatrix b = from_rows({{0, 1}, {1, 0}});
  CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
  CHECK(a + b - b == a);
  CHECK(a.transpose().transpose() == a);
  CHECK((a - a).is_zero());
  CHECK(a.apply({Rational(1), Rational(1)}) == std::vector<Rational>{Rational(3), Rational(7)});
}

}  // TEST_SUITE
