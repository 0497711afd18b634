#include <anick/ratmatrix.hpp>

#include <anick/errors.hpp>

#include <algorithm>

namespace anick {

RatMatrix RatMatrix::identity(size_t n) {
  RatMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in +");
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch in -");
  RatMatrix r(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix shape mismatch in *");
  RatMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Rational& b = o.at(k, j);
        if (b == 0) continue;
        Rational prod = a * b;
        r.at(i, j) += prod;
      }
    }
  return r;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw InputError("vector length mismatch in apply");
  std::vector<Rational> out(rows_);
  for (size_t i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (size_t j = 0; j < cols_; ++j) {
      if (at(i, j) == 0 || v[j] == 0) continue;
      Rational prod = at(i, j) * v[j];
      s += prod;
    }
    out[i] = s;
  }
  return out;
}

size_t rank_bareiss(const RatMatrix& m) {
  const size_t R = m.rows(), C = m.cols();
  if (R == 0 || C == 0) return 0;
  std::vector<std::vector<BigInt>> a(R, std::vector<BigInt>(C));
  for (size_t i = 0; i < R; ++i) {
    BigInt scale = 1;
    for (size_t j = 0; j < C; ++j) {
      BigInt d = denom(m.at(i, j));
      scale = scale / boost::multiprecision::gcd(scale, d) * d;
    }
    for (size_t j = 0; j < C; ++j) {
      Rational scaled = m.at(i, j) * Rational(scale);
      a[i][j] = numer(scaled);
    }
  }
  size_t rank = 0;
  BigInt prev = 1;
  size_t row = 0;
  for (size_t col = 0; col < C && row < R; ++col) {
    size_t piv = row;
    while (piv < R && a[piv][col] == 0) ++piv;
    if (piv == R) continue;
    std::swap(a[piv], a[row]);
    for (size_t i = row + 1; i < R; ++i) {
      for (size_t j = col + 1; j < C; ++j)
        a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
    ++rank;
  }
  return rank;
}

RatMatrix rref(const RatMatrix& m, size_t* rankOut, std::vector<size_t>* pivotCols) {
  RatMatrix a = m;
  const size_t R = a.rows(), C = a.cols();
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < C && row < R; ++col) {
    size_t piv = row;
    while (piv < R && a.at(piv, col) == 0) ++piv;
    if (piv == R) continue;
    if (piv != row)
      for (size_t j = 0; j < C; ++j) std::swap(a.at(piv, j), a.at(row, j));
    Rational inv = Rational(1) / a.at(row, col);
    for (size_t j = col; j < C; ++j) a.at(row, j) *= inv;
    for (size_t i = 0; i < R; ++i) {
      if (i == row || a.at(i, col) == 0) continue;
      Rational f = a.at(i, col);
      for (size_t j = col; j < C; ++j) {
        Rational prod = f * a.at(row, j);
        a.at(i, j) -= prod;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  if (rankOut) *rankOut = pivots.size();
  if (pivotCols) *pivotCols = std::move(pivots);
  return a;
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
  size_t rank = 0;
  std::vector<size_t> pivots;
  RatMatrix r = rref(m, &rank, &pivots);
  const size_t C = m.cols();
  std::vector<bool> isPivot(C, false);
  for (size_t p : pivots) isPivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (size_t freeCol = 0; freeCol < C; ++freeCol) {
    if (isPivot[freeCol]) continue;
    std::vector<Rational> v(C);
    v[freeCol] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, freeCol);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<size_t> independent_columns(const RatMatrix& m) {
  std::vector<size_t> pivots;
  rref(m, nullptr, &pivots);
  return pivots;
}

std::optional<std::vector<Rational>> solve_columns(const RatMatrix& A,
                                                   const std::vector<Rational>& b) {
  if (b.size() != A.rows()) throw InputError("vector length mismatch in solve_columns");
  RatMatrix aug(A.rows(), A.cols() + 1);
  for (size_t i = 0; i < A.rows(); ++i) {
    for (size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  std::vector<size_t> pivots;
  RatMatrix r = rref(aug, nullptr, &pivots);
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;  // inconsistent
  std::vector<Rational> x(A.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r.at(i, A.cols());
  return x;
}

}  // namespace anick
