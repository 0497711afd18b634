#include <anick/conformal.hpp>
#include <anick/errors.hpp>

#include <doctest.h>

using namespace anick::conformal;
using anick::InputError;
using anick::IsoFailure;
using anick::LeftPositivePart;
using anick::MathError;
using anick::RankMismatch;
using anick::Rational;

namespace {

// rank-1 element with a single polynomial entry
ConformalElement scalar_entry(const Poly3& p) {
  ConformalElement a(1);
  a.entry(0, 0) = p;
  return a;
}

Poly3 var_d() { return Poly3::monomial(1, 0, 0, 1); }
Poly3 var_x() { return Poly3::monomial(0, 1, 0, 1); }

}  // namespace

TEST_SUITE("conformal") {

TEST_CASE("trivariate polynomials are exact") {
  Poly3 f = var_x() * var_x() + Poly3::constant(-3);
  CHECK(f.to_text() == "-3 + x^2");
  CHECK((f - f).is_zero());
  CHECK(f.lambda_degree() == 0);
  CHECK(f.lambda_free());
  CHECK(Poly3{}.lambda_degree() == -1);
  Poly3 g = Poly3::monomial(0, 0, 2, Rational(1, 2));
  CHECK(g.lambda_degree() == 2);
  CHECK(!g.lambda_free());
  CHECK(g.lambda_coefficient(2) == Poly3::constant(Rational(1, 2)));
  CHECK(g.lambda_coefficient(1).is_zero());
}

TEST_CASE("substitutions expand binomially") {
  // D -> D + L on D^2: (D + L)^2 = D^2 + 2 D L + L^2
  Poly3 d2 = var_d() * var_d();
  Poly3 shifted = d2.shift_by_lambda();
  Poly3 expected = d2 + Poly3::monomial(1, 0, 1, 2) + Poly3::monomial(0, 0, 2, 1);
  CHECK(shifted == expected);

  // D -> -L on D^3
  Poly3 d3 = d2 * var_d();
  CHECK(d3.subst_d_to_minus_lambda() == Poly3::monomial(0, 0, 3, -1));

  // x-derivative
  Poly3 x3 = var_x() * var_x() * var_x();
  CHECK(x3.derivative_x() == Poly3::monomial(0, 2, 0, 3));
}

TEST_CASE("lambda products reproduce the worked examples") {
  ConformalElement x = scalar_entry(var_x());
  ConformalElement one = ConformalElement::one(1);
  ConformalElement d = scalar_entry(var_d());

  // x (.lambda) x = x^2 + x lambda
  LambdaMatrix xx = lambda_product(x, x);
  CHECK(xx.entry(0, 0) == var_x() * var_x() + Poly3::monomial(0, 1, 1, 1));

  // x (.lambda) D = x D + x lambda
  LambdaMatrix xd = lambda_product(x, d);
  CHECK(xd.entry(0, 0) == var_x() * var_d() + Poly3::monomial(0, 1, 1, 1));

  // 1 (.0) x = x and 1 (.1) x = 1
  CHECK(s_product(one, x, 0) == x);
  CHECK(s_product(one, x, 1) == one);
  CHECK(s_product(one, x, 2).is_zero());

  // x (.1) x^2 = 2 x^2
  ConformalElement x2 = scalar_entry(var_x() * var_x());
  ConformalElement expected = scalar_entry(var_x() * var_x() + var_x() * var_x());
  CHECK(s_product(x, x2, 1) == expected);
}

TEST_CASE("matrix units multiply like matrix units") {
  ConformalElement e01 = ConformalElement::matrix_unit(2, 0, 1, Poly3::constant(1));
  ConformalElement e10 = ConformalElement::matrix_unit(2, 1, 0, Poly3::constant(1));
  LambdaMatrix prod = lambda_product(e01, e10);
  CHECK(prod.entry(0, 0) == Poly3::constant(1));
  CHECK(prod.entry(1, 1).is_zero());
  LambdaMatrix zero = lambda_product(e01, e01);
  CHECK(zero.entry(0, 0).is_zero());
  CHECK(zero.entry(0, 1).is_zero());
  CHECK_THROWS_AS(lambda_product(e01, ConformalElement::one(3)), RankMismatch);
  CHECK_THROWS_AS(ConformalElement::matrix_unit(2, 0, 1, Poly3::monomial(0, 0, 1, 1)),
                  InputError);
}

TEST_CASE("coefficient algebra products") {
  // 1(1) x(0) = 1(0) + x(1)
  CoeffElement t1 = coeff_monomial(1, 0, 0, 0, 1);
  CoeffElement x0 = coeff_monomial(1, 0, 0, 1, 0);
  CoeffElement expected(1);
  expected.add({0, 0, 0, 0}, 1);
  expected.add({0, 0, 1, 1}, 1);
  CHECK(coeff_product(t1, x0) == expected);

  // x(0) 1(1) = x(1) has no extra term
  CHECK(coeff_product(x0, t1) == coeff_monomial(1, 0, 0, 1, 1));

  // 1(n) 1(m) = 1(n+m)
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      CHECK(coeff_product(coeff_monomial(1, 0, 0, 0, n), coeff_monomial(1, 0, 0, 0, m)) ==
            coeff_monomial(1, 0, 0, 0, n + m));

  // x(n) x(m) = x^2(n+m) + n x(n+m-1)
  CoeffElement x2 = coeff_product(coeff_monomial(1, 0, 0, 1, 2), coeff_monomial(1, 0, 0, 1, 1));
  CoeffElement expected2(1);
  expected2.add({0, 0, 2, 3}, 1);
  expected2.add({0, 0, 1, 2}, 2);
  CHECK(x2 == expected2);
}

TEST_CASE("coefficient text rendering") {
  CoeffElement t1 = coeff_monomial(1, 0, 0, 0, 1);
  CoeffElement x0 = coeff_monomial(1, 0, 0, 1, 0);
  CHECK(coeff_product(t1, x0).to_text() == "1(0) + x(1)");
  CHECK(CoeffElement(1).to_text() == "0");
}

TEST_CASE("negative-index coefficients are rejected") {
  CoeffElement bad(1);
  CHECK_THROWS_AS(bad.add({0, 0, 0, -1}, 1), LeftPositivePart);
  CHECK_THROWS_AS(bad.add({0, 2, 0, 0}, 1), InputError);
  CHECK_NOTHROW(bad.add({0, 0, 0, 0}, 1));
}

TEST_CASE("expansion coefficients normalize derivatives away") {
  // (D x)(n): D^i x^j (n) = (-1)^i falling(n, i) x^j (n - i)
  ConformalElement dx = scalar_entry(var_d() * var_x());
  CoeffElement c2 = coeff_from(dx, 2);
  CoeffElement expected(1);
  expected.add({0, 0, 1, 1}, -2);
  CHECK(c2 == expected);

  // (D^2)(1) = 0: falling(1, 2) = 0
  ConformalElement d2 = scalar_entry(var_d() * var_d());
  CHECK(coeff_from(d2, 1).is_zero());
  // (D^2)(0) = 0 as well, but (D^2)(3) = 6 1(1)
  CHECK(coeff_from(d2, 0).is_zero());
  CoeffElement six(1);
  six.add({0, 0, 0, 1}, 6);
  CHECK(coeff_from(d2, 3) == six);
}

TEST_CASE("left and right actions on the positive part") {
  ConformalElement x = scalar_entry(var_x());
  ConformalElement one = ConformalElement::one(1);

  // 1(0) acts as the identity on both sides
  auto [l0, r0] = coeff_actions(x, one, 0);
  CHECK(l0 == x);
  CHECK(r0 == x);
  auto [lu, ru] = coeff_actions(one, one, 0);
  CHECK(lu == one);
  CHECK(ru == one);

  // 1(1) differentiates from the left and dies from the right on x
  auto [l1, r1] = coeff_actions(x, one, 1);
  CHECK(l1 == one);
  CHECK(r1.is_zero());
}

TEST_CASE("product and actions respect associativity samples") {
  CHECK(associativity_sweep(4) > 0);
}

TEST_CASE("isomorphism window check") {
  IsoCertificate small = weyl_iso_check(3, 1);
  CHECK(small.window == 3);
  CHECK(small.rank == 1);
  CHECK(small.pairs_checked == 100);

  IsoCertificate matrix = weyl_iso_check(2, 2);
  CHECK(matrix.rank == 2);
  CHECK(matrix.pairs_checked == 576);
}

}  // TEST_SUITE
