#include <anick/conformal.hpp>

#include <anick/errors.hpp>
#include <anick/freealg.hpp>
#include <anick/weyl.hpp>

#include <algorithm>
#include <sstream>

namespace anick::conformal {

Poly3 Poly3::constant(const Rational& c) { return monomial(0, 0, 0, c); }

Poly3 Poly3::monomial(int d, int x, int l, const Rational& c) {
  Poly3 p;
  p.add({d, x, l}, c);
  return p;
}

void Poly3::add(const Mono3& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Poly3& Poly3::operator+=(const Poly3& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Poly3& Poly3::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly3 Poly3::operator*(const Poly3& o) const {
  Poly3 out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_)
      out.add({m1.d + m2.d, m1.x + m2.x, m1.l + m2.l}, c1 * c2);
  return out;
}

int Poly3::lambda_degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.l);
  return deg;
}

Poly3 Poly3::subst_d_to_minus_lambda() const {
  Poly3 out;
  for (const auto& [m, c] : terms_) {
    Rational v = (m.d % 2 == 0) ? c : -c;
    out.add({0, m.x, m.l + m.d}, v);
  }
  return out;
}

Poly3 Poly3::shift_by_lambda() const {
  Poly3 out;
  for (const auto& [m, c] : terms_) {
    for (int a = 0; a <= m.d; ++a) {
      Rational ca = c * Rational(binomial(m.d, a));
      for (int b = 0; b <= m.x; ++b) {
        Rational cab = ca * Rational(binomial(m.x, b));
        out.add({a, b, m.l + (m.d - a) + (m.x - b)}, cab);
      }
    }
  }
  return out;
}

Poly3 Poly3::lambda_coefficient(int s) const {
  Poly3 out;
  for (const auto& [m, c] : terms_)
    if (m.l == s) out.add({m.d, m.x, 0}, c);
  return out;
}

Poly3 Poly3::derivative_x() const {
  Poly3 out;
  for (const auto& [m, c] : terms_)
    if (m.x > 0) out.add({m.d, m.x - 1, m.l}, c * Rational(m.x));
  return out;
}

namespace {

void append_power(std::ostringstream& os, const char* name, int e, bool& any) {
  if (e == 0) return;
  if (any) os << "*";
  os << name;
  if (e > 1) os << "^" << e;
  any = true;
}

}  // namespace

std::string Poly3::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool any = false;
    if (a != 1 || (m.d == 0 && m.x == 0 && m.l == 0)) {
      os << to_string(a);
      any = true;
    }
    append_power(os, "D", m.d, any);
    append_power(os, "x", m.x, any);
    append_power(os, "L", m.l, any);
  }
  return os.str();
}

ConformalElement::ConformalElement(size_t rank) : rank_(rank), entries_(rank * rank) {
  if (rank == 0) throw InputError("conformal element rank must be positive");
}

ConformalElement ConformalElement::scalar(const Poly3& p) {
  return matrix_unit(1, 0, 0, p);
}

ConformalElement ConformalElement::matrix_unit(size_t rank, size_t row, size_t col,
                                               const Poly3& p) {
  if (row >= rank || col >= rank) throw InputError("matrix unit position out of range");
  if (p.lambda_degree() > 0)
    throw InputError("conformal element entries may not mention the lambda symbol");
  ConformalElement e(rank);
  e.entry(row, col) = p;
  return e;
}

ConformalElement ConformalElement::one(size_t rank) {
  ConformalElement e(rank);
  for (size_t i = 0; i < rank; ++i) e.entry(i, i) = Poly3::constant(1);
  return e;
}

bool ConformalElement::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Poly3& p) { return p.is_zero(); });
}

ConformalElement ConformalElement::operator+(const ConformalElement& o) const {
  if (rank_ != o.rank_) throw RankMismatch("adding conformal elements of different ranks");
  ConformalElement out = *this;
  for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += o.entries_[i];
  return out;
}

ConformalElement ConformalElement::operator-(const ConformalElement& o) const {
  if (rank_ != o.rank_) throw RankMismatch("subtracting conformal elements of different ranks");
  ConformalElement out = *this;
  for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= o.entries_[i];
  return out;
}

ConformalElement& ConformalElement::operator*=(const Rational& c) {
  for (auto& p : entries_) p *= c;
  return *this;
}

int LambdaMatrix::lambda_degree() const {
  int deg = -1;
  for (const auto& p : entries) deg = std::max(deg, p.lambda_degree());
  return deg;
}

LambdaMatrix lambda_product(const ConformalElement& f, const ConformalElement& g) {
  if (f.rank() != g.rank())
    throw RankMismatch("lambda product of ranks " + std::to_string(f.rank()) + " and " +
                       std::to_string(g.rank()));
  size_t k = f.rank();
  std::vector<Poly3> fs(k * k), gs(k * k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      fs[i * k + j] = f.entry(i, j).subst_d_to_minus_lambda();
      gs[i * k + j] = g.entry(i, j).shift_by_lambda();
    }
  LambdaMatrix out;
  out.rank = k;
  out.entries.resize(k * k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      Poly3 acc;
      for (size_t l = 0; l < k; ++l) acc += fs[i * k + l] * gs[l * k + j];
      out.entries[i * k + j] = acc;
    }
  return out;
}

ConformalElement s_product(const ConformalElement& f, const ConformalElement& g, long s) {
  if (s < 0) throw InputError("s-product index must be nonnegative");
  LambdaMatrix lp = lambda_product(f, g);
  ConformalElement out(f.rank());
  Rational fact(factorial(s));
  for (size_t i = 0; i < f.rank(); ++i)
    for (size_t j = 0; j < f.rank(); ++j) {
      Poly3 p = lp.entry(i, j).lambda_coefficient(static_cast<int>(s));
      p *= fact;
      out.entry(i, j) = p;
    }
  return out;
}

bool CoeffKeyLess::operator()(const CoeffKey& a, const CoeffKey& b) const {
  if (a.row != b.row) return a.row < b.row;
  if (a.col != b.col) return a.col < b.col;
  if (a.xdeg != b.xdeg) return a.xdeg < b.xdeg;
  return a.index < b.index;
}

void CoeffElement::add(const CoeffKey& key, const Rational& c) {
  if (c == 0) return;
  if (key.row >= rank_ || key.col >= rank_)
    throw InputError("coefficient key position out of range");
  if (key.xdeg < 0) throw InputError("coefficient key with negative polynomial degree");
  if (key.index < 0)
    throw LeftPositivePart("coefficient at negative index " + std::to_string(key.index));
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

CoeffElement& CoeffElement::operator+=(const CoeffElement& o) {
  if (rank_ != o.rank_) throw RankMismatch("adding coefficient elements of different ranks");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

CoeffElement& CoeffElement::operator-=(const CoeffElement& o) {
  if (rank_ != o.rank_)
    throw RankMismatch("subtracting coefficient elements of different ranks");
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

CoeffElement& CoeffElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string CoeffElement::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1) os << to_string(a) << "*";
    if (rank_ > 1) os << "E" << k.row << k.col << "*";
    if (k.xdeg == 0)
      os << "1";
    else {
      os << "x";
      if (k.xdeg > 1) os << "^" << k.xdeg;
    }
    os << "(" << k.index << ")";
  }
  return os.str();
}

CoeffElement coeff_monomial(size_t rank, size_t row, size_t col, long xdeg, long index) {
  CoeffElement out(rank);
  out.add({row, col, xdeg, index}, 1);
  return out;
}

CoeffElement coeff_from(const ConformalElement& a, long n) {
  CoeffElement out(a.rank());
  for (size_t r = 0; r < a.rank(); ++r)
    for (size_t c = 0; c < a.rank(); ++c)
      for (const auto& [m, v] : a.entry(r, c).terms()) {
        if (m.l != 0)
          throw InputError("conformal element entries may not mention the lambda symbol");
        Rational coef = v * Rational(falling_factorial(n, m.d));
        if (m.d % 2 != 0) coef = -coef;
        out.add({r, c, m.x, n - m.d}, coef);
      }
  return out;
}

CoeffElement coeff_product(const CoeffElement& A, const CoeffElement& B) {
  if (A.rank() != B.rank())
    throw RankMismatch("coefficient product of ranks " + std::to_string(A.rank()) + " and " +
                       std::to_string(B.rank()));
  CoeffElement out(A.rank());
  for (const auto& [k1, c1] : A.terms()) {
    for (const auto& [k2, c2] : B.terms()) {
      if (k1.col != k2.row) continue;
      ConformalElement a =
          ConformalElement::scalar(Poly3::monomial(0, static_cast<int>(k1.xdeg), 0, 1));
      ConformalElement b =
          ConformalElement::scalar(Poly3::monomial(0, static_cast<int>(k2.xdeg), 0, 1));
      LambdaMatrix lp = lambda_product(a, b);
      int top = lp.lambda_degree();
      Rational base = c1 * c2;
      for (int s = 0; s <= top; ++s) {
        Rational outer = base * Rational(binomial(k1.index, s)) * Rational(factorial(s));
        if (outer == 0) continue;
        long idx = k1.index + k2.index - s;
        Poly3 part = lp.entry(0, 0).lambda_coefficient(s);
        for (const auto& [m, v] : part.terms()) {
          Rational coef = outer * v * Rational(falling_factorial(idx, m.d));
          if (m.d % 2 != 0) coef = -coef;
          out.add({k1.row, k2.col, m.x, idx - m.d}, coef);
        }
      }
    }
  }
  return out;
}

std::pair<ConformalElement, ConformalElement> coeff_actions(const ConformalElement& u,
                                                            const ConformalElement& a,
                                                            long n) {
  if (n < 0) throw InputError("coefficient action index must be nonnegative");
  if (u.rank() != a.rank())
    throw RankMismatch("coefficient action between ranks " + std::to_string(u.rank()) +
                       " and " + std::to_string(a.rank()));
  ConformalElement left = s_product(a, u, n);
  size_t k = u.rank();
  ConformalElement right(k);
  LambdaMatrix lp = lambda_product(u, a);
  int top = lp.lambda_degree();
  for (long s = 0; n + s <= top; ++s) {
    Rational outer = Rational(factorial(n + s)) / Rational(factorial(s));
    if ((n + s) % 2 != 0) outer = -outer;
    Poly3 dpow = Poly3::monomial(static_cast<int>(s), 0, 0, 1);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) {
        Poly3 p = lp.entry(i, j).lambda_coefficient(static_cast<int>(n + s));
        p *= outer;
        right.entry(i, j) += dpow * p;
      }
  }
  return {left, right};
}

namespace {

struct W1Letters {
  Presentation pres;
  Letter q, p, e;
};

W1Letters w1_letters() {
  Presentation pres = weyl::w1_presentation();
  return {pres, pres.letter("q"), pres.letter("p"), pres.letter("e")};
}

Word monomial_word(const W1Letters& w, long a, long b) {
  if (a == 0 && b == 0) return Word::single(w.e);
  Word out;
  for (long i = 0; i < a; ++i) out = out + Word::single(w.p);
  for (long i = 0; i < b; ++i) out = out + Word::single(w.q);
  return out;
}

// Decodes a normal word of the reference presentation as (xdeg, index).
std::pair<long, long> decode_normal(const W1Letters& w, const Word& word) {
  if (word.size() == 1 && word[0] == w.e) return {0, 0};
  long a = 0, b = 0;
  size_t i = 0;
  while (i < word.size() && word[i] == w.p) {
    ++a;
    ++i;
  }
  while (i < word.size() && word[i] == w.q) {
    ++b;
    ++i;
  }
  if (i != word.size() || word.size() == 0)
    throw MathError("unexpected normal word " + w.pres.format_word(word));
  return {a, b};
}

}  // namespace

IsoCertificate weyl_iso_check(int window, size_t rank) {
  if (window < 0) throw InputError("iso check window must be nonnegative");
  if (rank == 0) throw InputError("iso check rank must be positive");
  W1Letters w = w1_letters();

  std::vector<std::pair<long, long>> monos;
  for (long a = 0; a <= window; ++a)
    for (long b = 0; a + b <= window; ++b) monos.emplace_back(a, b);

  IsoCertificate cert;
  cert.rank = rank;
  cert.window = window;
  cert.pairs_checked = 0;

  for (const auto& [a1, b1] : monos) {
    for (const auto& [a2, b2] : monos) {
      FreePoly prod =
          w.pres.normal_form(FreePoly::monomial(monomial_word(w, a1, b1) + monomial_word(w, a2, b2)));
      for (size_t i = 0; i < rank; ++i)
        for (size_t j = 0; j < rank; ++j)
          for (size_t l = 0; l < rank; ++l)
            for (size_t m = 0; m < rank; ++m) {
              CoeffElement computed = coeff_product(coeff_monomial(rank, i, j, a1, b1),
                                                    coeff_monomial(rank, l, m, a2, b2));
              CoeffElement expected(rank);
              if (j == l)
                for (const auto& [word, c] : prod.terms()) {
                  auto [xd, idx] = decode_normal(w, word);
                  expected.add({i, m, xd, idx}, c);
                }
              ++cert.pairs_checked;
              if (!(computed == expected)) {
                std::ostringstream os;
                os << "coefficient product disagrees with the reference presentation on "
                   << "E" << i << j << "*x^" << a1 << "t^" << b1 << " * E" << l << m << "*x^"
                   << a2 << "t^" << b2 << ": computed " << computed.to_text() << ", expected "
                   << expected.to_text();
                throw IsoFailure(os.str());
              }
            }
    }
  }
  return cert;
}

size_t associativity_sweep(int totalDegree) {
  if (totalDegree < 0) throw InputError("associativity sweep degree must be nonnegative");
  std::vector<std::pair<long, long>> monos;
  for (long a = 0; a <= totalDegree; ++a)
    for (long b = 0; a + b <= totalDegree; ++b) monos.emplace_back(a, b);

  size_t checked = 0;
  for (const auto& [a1, b1] : monos)
    for (const auto& [a2, b2] : monos) {
      if (a1 + b1 + a2 + b2 > totalDegree) continue;
      CoeffElement m1 = coeff_monomial(1, 0, 0, a1, b1);
      CoeffElement m2 = coeff_monomial(1, 0, 0, a2, b2);
      CoeffElement m12 = coeff_product(m1, m2);
      for (const auto& [a3, b3] : monos) {
        if (a1 + b1 + a2 + b2 + a3 + b3 > totalDegree) continue;
        CoeffElement m3 = coeff_monomial(1, 0, 0, a3, b3);
        CoeffElement lhs = coeff_product(m12, m3);
        CoeffElement rhs = coeff_product(m1, coeff_product(m2, m3));
        ++checked;
        if (!(lhs == rhs)) {
          std::ostringstream os;
          os << "coefficient product is not associative on x^" << a1 << "(" << b1 << "), x^"
             << a2 << "(" << b2 << "), x^" << a3 << "(" << b3 << "): left "
             << lhs.to_text() << ", right " << rhs.to_text();
          throw MathError(os.str());
        }
      }
    }
  return checked;
}

}  // namespace anick::conformal
