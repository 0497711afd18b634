#pragma once

#include <anick/rational.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace anick::conformal {

// Exact trivariate monomial D^d x^x L^l (derivation symbol, polynomial
// variable, and the formal parameter of the lambda-product).
struct Mono3 {
  int d = 0, x = 0, l = 0;
  bool operator==(const Mono3&) const = default;
};

struct Mono3Less {
  bool operator()(const Mono3& a, const Mono3& b) const {
    if (a.d != b.d) return a.d < b.d;
    if (a.x != b.x) return a.x < b.x;
    return a.l < b.l;
  }
};

class Poly3 {
 public:
  using TermMap = std::map<Mono3, Rational, Mono3Less>;

  Poly3() = default;
  static Poly3 constant(const Rational& c);
  static Poly3 monomial(int d, int x, int l, const Rational& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const Poly3&) const = default;

  void add(const Mono3& m, const Rational& c);
  Poly3& operator+=(const Poly3& o);
  Poly3& operator-=(const Poly3& o);
  Poly3& operator*=(const Rational& c);
  Poly3 operator*(const Poly3& o) const;
  Poly3 operator+(const Poly3& o) const {
    Poly3 r = *this;
    r += o;
    return r;
  }
  Poly3 operator-(const Poly3& o) const {
    Poly3 r = *this;
    r -= o;
    return r;
  }

  int lambda_degree() const;  // -1 for the zero polynomial
  bool lambda_free() const { return lambda_degree() <= 0; }

  Poly3 subst_d_to_minus_lambda() const;  // D -> -L
  Poly3 shift_by_lambda() const;          // D -> D+L, x -> x+L
  Poly3 lambda_coefficient(int s) const;  // [L^s], an L-free polynomial
  Poly3 derivative_x() const;

  std::string to_text() const;  // "x^2*D - 3" style

 private:
  TermMap terms_;
};

// k x k matrix over k[D, x]; the lambda symbol never appears in entries.
class ConformalElement {
 public:
  explicit ConformalElement(size_t rank = 1);
  static ConformalElement scalar(const Poly3& p);  // rank 1
  static ConformalElement matrix_unit(size_t rank, size_t row, size_t col, const Poly3& p);
  static ConformalElement one(size_t rank = 1);

  size_t rank() const { return rank_; }
  const Poly3& entry(size_t i, size_t j) const { return entries_[i * rank_ + j]; }
  Poly3& entry(size_t i, size_t j) { return entries_[i * rank_ + j]; }
  bool is_zero() const;
  bool operator==(const ConformalElement&) const = default;

  ConformalElement operator+(const ConformalElement& o) const;
  ConformalElement operator-(const ConformalElement& o) const;
  ConformalElement& operator*=(const Rational& c);

 private:
  size_t rank_ = 1;
  std::vector<Poly3> entries_;
};

// Matrix-valued polynomial in (D, x, L): the result of the lambda-product.
struct LambdaMatrix {
  size_t rank = 1;
  std::vector<Poly3> entries;

  const Poly3& entry(size_t i, size_t j) const { return entries[i * rank + j]; }
  int lambda_degree() const;
};

// f(-L, x) g(D+L, x+L) by the row-column rule. Throws RankMismatch.
LambdaMatrix lambda_product(const ConformalElement& f, const ConformalElement& g);

// s! times the L^s coefficient of the lambda-product.
ConformalElement s_product(const ConformalElement& f, const ConformalElement& g, long s);

// ---------------------------------------------------------------------------
// The positive-part coefficient algebra: spans of E_{row,col} x^xdeg (index).
// The derivation symbol is normalized away: (D^i x^j)(n) = (-1)^i n(n-1)..(n-i+1) x^j(n-i).

struct CoeffKey {
  size_t row = 0, col = 0;
  long xdeg = 0;
  long index = 0;
  bool operator==(const CoeffKey&) const = default;
};

struct CoeffKeyLess {
  bool operator()(const CoeffKey& a, const CoeffKey& b) const;
};

class CoeffElement {
 public:
  using TermMap = std::map<CoeffKey, Rational, CoeffKeyLess>;

  explicit CoeffElement(size_t rank = 1) : rank_(rank) {}

  size_t rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const CoeffElement&) const = default;

  // Throws LeftPositivePart on a negative index with nonzero coefficient.
  void add(const CoeffKey& key, const Rational& c);
  CoeffElement& operator+=(const CoeffElement& o);
  CoeffElement& operator-=(const CoeffElement& o);
  CoeffElement& operator*=(const Rational& c);

  std::string to_text() const;  // "x^2(3) + 2*1(0)" style, entry-tagged when rank > 1

 private:
  size_t rank_ = 1;
  TermMap terms_;
};

// E_{row,col} x^xdeg (index); rank-1 callers use row = col = 0.
CoeffElement coeff_monomial(size_t rank, size_t row, size_t col, long xdeg, long index);

// a(n) for a general matrix element, derivation symbols normalized away.
CoeffElement coeff_from(const ConformalElement& a, long n);

// a(n) b(m) = sum_s binom(n,s) (a o_s b)(n+m-s), termwise bilinear.
CoeffElement coeff_product(const CoeffElement& A, const CoeffElement& B);

// (a(n).u, u.a(n)) in the regular bimodule.
std::pair<ConformalElement, ConformalElement> coeff_actions(const ConformalElement& u,
                                                            const ConformalElement& a,
                                                            long n);

// ---------------------------------------------------------------------------

struct IsoCertificate {
  size_t rank = 1;
  int window = 0;
  size_t pairs_checked = 0;
};

// Verifies x -> p, t -> q transports coeff_product to the reference
// presentation's normal form on all monomial pairs with degree sums at most
// the window; rank > 1 checked entrywise on matrix units. Throws IsoFailure.
IsoCertificate weyl_iso_check(int window, size_t rank = 1);

// ((m1 m2) m3) = (m1 (m2 m3)) over all rank-1 monomials x^a(b) whose three
// degrees a+b sum to at most totalDegree. Returns the number of triples
// checked; throws MathError with a witness on failure.
size_t associativity_sweep(int totalDegree);

}  // namespace anick::conformal
